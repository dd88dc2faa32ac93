#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdeform/bigint.hpp"
#include "mdeform/polynomial.hpp"

namespace mdeform {

/// Regular expansion [a1, a2, ..., a2m] = a1 + 1/(a2 + 1/(...)), even length.
struct CFRegular {
  std::vector<long> terms;
  friend bool operator==(const CFRegular&, const CFRegular&) = default;
};

/// Negative expansion [[c1, ..., ck]] = c1 - 1/(c2 - 1/(...)), ci >= 2 for i >= 2.
struct CFNegative {
  std::vector<long> terms;
  friend bool operator==(const CFNegative&, const CFNegative&) = default;
};

/// Quotients x0, x1, ... of x0 + 1/(x1 + 1/(x2 + ...)) in Z[t].
using PolyCF = std::vector<IntPoly>;

void validate(const CFRegular& cf);
void validate(const CFNegative& cf);

CFRegular cf_regular(const BigRational& x);
CFNegative cf_negative(const BigRational& x);

/// Integer part followed by an even-length tail, e.g. 8/13 -> [0; 1,1,1,1,1,1].
CFRegular cf_regular_tail_even(const BigRational& x);

CFNegative to_negative(const CFRegular& cf);
CFRegular to_regular(const CFNegative& cf);

BigRational evaluate(const CFRegular& cf);
BigRational evaluate(const CFNegative& cf);

/// Numerator and denominator in lowest terms, denominator with positive
/// leading coefficient.
std::pair<IntPoly, IntPoly> polycf_eval(const PolyCF& cf);

std::vector<long> parse_terms(std::string_view text);
std::string format_terms(const std::vector<long>& terms);

}  // namespace mdeform
