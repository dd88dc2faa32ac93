#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdeform/laurent.hpp"
#include "mdeform/mat2.hpp"
#include "mdeform/polynomial.hpp"
#include "mdeform/rat_func.hpp"

namespace mdeform {

using json = nlohmann::json;

/// Human-readable forms, highest power first: "t^2 - t - 1", "q + 1 + q^-1".
std::string format(const IntPoly& p, std::string_view var = "t");
std::string format(const LaurentPoly& p, std::string_view var = "q");
std::string format(const RatFunc& f, std::string_view var = "q");
std::string format(const BigInt& x);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Parse a sum of terms c*x^e (the '*' and '^' are optional where
/// unambiguous), e.g. "t^4-2t^3+t-1" or "q^-2 + 1".
IntPoly parse_intpoly(std::string_view text, char var = 't');
LaurentPoly parse_laurent(std::string_view text, char var = 'q');

json to_json(const BigInt& x);
json to_json(const IntPoly& p);
json to_json(const LaurentPoly& p);
json to_json(const RatFunc& f);
json to_json(const BigRational& x);

template <typename Scalar>
json to_json(const Mat2<Scalar>& m) {
  return json::array({to_json(m(0, 0)), to_json(m(0, 1)), to_json(m(1, 0)), to_json(m(1, 1))});
}

IntPoly intpoly_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
RatFunc ratfunc_from_json(const json& j);

}  // namespace mdeform
