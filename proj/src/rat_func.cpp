#include "mdeform/rat_func.hpp"

#include "mdeform/errors.hpp"

namespace mdeform {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  long shift = num_.low() - den_.low();
  IntPoly n = num_.shifted_part();
  IntPoly d = den_.shifted_part();
  IntPoly g = gcd(n, d);
  n = divexact(n, g);
  d = divexact(d, g);
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  num_ = LaurentPoly(n).shift(shift);
  den_ = LaurentPoly(d);
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::inv_q() const { return RatFunc(num_.inv_q(), den_.inv_q()); }

BigRational RatFunc::eval_at_one() const {
  BigInt d = den_.eval_at_one();
  if (d == 0) throw ZeroDenominator("denominator vanishes at q = 1");
  return BigRational(num_.eval_at_one(), d);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc compose(const IntPoly& p, const RatFunc& s) {
  RatFunc acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + RatFunc(*it);
  return acc;
}

}  // namespace mdeform
