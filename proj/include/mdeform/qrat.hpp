#pragma once

#include <optional>

#include "mdeform/contfrac.hpp"
#include "mdeform/laurent.hpp"
#include "mdeform/mat2.hpp"
#include "mdeform/rat_func.hpp"

namespace mdeform {

/// [r/s]_q = R(q)/S(q) with R, S ordinary polynomials sharing no factor.
struct QRational {
  LaurentPoly num;
  LaurentPoly den;

  static QRational from(const RatFunc& f);
  RatFunc value() const { return RatFunc(num, den); }
  BigRational at_one() const { return BigRational(num.eval_at_one(), den.eval_at_one()); }
  friend bool operator==(const QRational&, const QRational&) = default;
};

/// [a]_{q^-1} = 1 + q^-1 + ... + q^-(a-1).
LaurentPoly q_int_inv(long a);

QRational q_rational_regular(const CFRegular& cf);
QRational q_rational_negative(const CFNegative& cf);
QRational q_rational(const BigRational& x);

/// Product of [[ [a]_q, q^a ],[1, 0]] (odd positions) and
/// [[ [a]_{q^-1}, q^-a ],[1, 0]] (even positions).
LaurentMat mq_plus(const CFRegular& cf);

/// Product of [[ [c]_q, -q^(c-1) ],[1, 0]].
LaurentMat mq_neg(const CFNegative& cf);

LaurentMat r_q();
LaurentMat l_q();

/// R_q^a1 L_q^a2 ... L_q^a2m.
LaurentMat generator_product(const CFRegular& cf);

/// Sum of a1 - a2 + a3 - ...; det(generator_product) = q^that.
long alternating_sum(const CFRegular& cf);

/// Exponent k with column == q^k * (R, S), or nothing if the column is not
/// a monomial multiple of the pair.
std::optional<long> unit_factor(const LaurentPoly& top, const LaurentPoly& bottom, const QRational& r);

}  // namespace mdeform
