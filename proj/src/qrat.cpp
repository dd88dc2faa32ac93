#include "mdeform/qrat.hpp"

#include "mdeform/errors.hpp"

namespace mdeform {

namespace {

const LaurentPoly kOne(1);

LaurentMat step(LaurentPoly top_left, LaurentPoly top_right) {
  return make_mat2(std::move(top_left), std::move(top_right), kOne, LaurentPoly());
}

}  // namespace

QRational QRational::from(const RatFunc& f) {
  long k = std::min(f.num().low(), f.den().low());
  if (f.num().is_zero()) k = f.den().low();
  return {f.num().shift(-k), f.den().shift(-k)};
}

LaurentPoly q_int_inv(long a) { return q_int(a).inv_q(); }

QRational q_rational_regular(const CFRegular& cf) {
  validate(cf);
  const auto& a = cf.terms;
  // Innermost level is [a_2m]_{q^-1}; each level above adds base^{a_i}/value.
  RatFunc acc(q_int_inv(a.back()));
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    bool odd_position = i % 2 == 0;
    LaurentPoly head = odd_position ? q_int(a[i]) : q_int_inv(a[i]);
    LaurentPoly weight = LaurentPoly::monomial(odd_position ? a[i] : -a[i]);
    acc = RatFunc(head) + RatFunc(weight) / acc;
  }
  return QRational::from(acc);
}

QRational q_rational_negative(const CFNegative& cf) {
  validate(cf);
  const auto& c = cf.terms;
  RatFunc acc(q_int(c.back()));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = RatFunc(q_int(c[i])) - RatFunc(LaurentPoly::monomial(c[i] - 1)) / acc;
  }
  return QRational::from(acc);
}

QRational q_rational(const BigRational& x) { return q_rational_regular(cf_regular(x)); }

LaurentMat mq_plus(const CFRegular& cf) {
  validate(cf);
  LaurentMat m = identity2<LaurentPoly>();
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    long a = cf.terms[i];
    LaurentMat f = i % 2 == 0 ? step(q_int(a), LaurentPoly::monomial(a))
                              : step(q_int_inv(a), LaurentPoly::monomial(-a));
    m = (m * f).eval();
  }
  return m;
}

LaurentMat mq_neg(const CFNegative& cf) {
  validate(cf);
  LaurentMat m = identity2<LaurentPoly>();
  for (long c : cf.terms) m = (m * step(q_int(c), -LaurentPoly::monomial(c - 1))).eval();
  return m;
}

LaurentMat r_q() { return make_mat2(LaurentPoly::q(), kOne, LaurentPoly(), kOne); }

LaurentMat l_q() { return make_mat2(kOne, LaurentPoly(), kOne, LaurentPoly::monomial(-1)); }

LaurentMat generator_product(const CFRegular& cf) {
  LaurentMat m = identity2<LaurentPoly>();
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (cf.terms[i] < 0) throw OutOfRange("negative exponent in a generator product");
    m = (m * power(i % 2 == 0 ? r_q() : l_q(), static_cast<unsigned>(cf.terms[i]))).eval();
  }
  return m;
}

long alternating_sum(const CFRegular& cf) {
  long s = 0;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) s += i % 2 == 0 ? cf.terms[i] : -cf.terms[i];
  return s;
}

std::optional<long> unit_factor(const LaurentPoly& top, const LaurentPoly& bottom, const QRational& r) {
  if (r.num.is_zero() || top.is_zero()) return std::nullopt;
  long k = top.low() - r.num.low();
  if (top == r.num.shift(k) && bottom == r.den.shift(k)) return k;
  return std::nullopt;
}

}  // namespace mdeform
