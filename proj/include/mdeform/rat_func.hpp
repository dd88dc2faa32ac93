#pragma once

#include "mdeform/laurent.hpp"
#include "mdeform/polynomial.hpp"

namespace mdeform {

/// Element of the fraction field Q(q), kept as num/den with num, den in
/// Z[q, q^-1]. Normal form: den has offset 0 and a positive leading
/// coefficient, and num/den share no common factor over Z[q] (content
/// included). Equality is structural on the normal form.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  explicit RatFunc(int constant) : num_(constant), den_(1) {}
  explicit RatFunc(const BigInt& constant) : num_(constant), den_(1) {}
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) { normalize(); }
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[q, q^-1].
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  RatFunc inverse() const;
  RatFunc inv_q() const;
  BigRational eval_at_one() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// p(s) for p in Z[t] and s in Q(q).
RatFunc compose(const IntPoly& p, const RatFunc& s);

}  // namespace mdeform
