#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mdeform/bigint.hpp"
#include "mdeform/polynomial.hpp"

namespace mdeform {

/// Element of Scalar[q, q^-1]. Stored as q^offset * (c0 + c1 q + ...), with
/// both c0 and the last coefficient nonzero. Zero is the empty list with
/// offset 0, so equality is structural.
template <typename Scalar>
class LaurentPolynomial {
 public:
  using scalar_type = Scalar;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Scalar constant) {
    if (constant != Scalar(0)) coeffs_.push_back(std::move(constant));
  }
  explicit LaurentPolynomial(int constant) : LaurentPolynomial(Scalar(constant)) {}
  LaurentPolynomial(long offset, std::vector<Scalar> coeffs)
      : offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
  }
  LaurentPolynomial(long offset, std::initializer_list<Scalar> coeffs)
      : offset_(offset), coeffs_(coeffs) {
    normalize();
  }
  explicit LaurentPolynomial(const Polynomial<Scalar>& p) : offset_(0), coeffs_(p.coeffs()) { normalize(); }

  static LaurentPolynomial monomial(long exponent, Scalar coeff = Scalar(1)) {
    return LaurentPolynomial(exponent, std::vector<Scalar>{std::move(coeff)});
  }
  static LaurentPolynomial q() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent present (0 for zero).
  long low() const { return offset_; }
  /// Highest exponent present (offset - 1 for zero).
  long high() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
  long offset() const { return offset_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(long exponent) const {
    long i = exponent - offset_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Scalar& leading() const { return coeffs_.back(); }

  /// The ordinary polynomial q^-low * self.
  Polynomial<Scalar> shifted_part() const { return Polynomial<Scalar>(coeffs_); }

  /// Value at q = 1, the sum of the coefficients.
  Scalar eval_at_one() const {
    Scalar s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// Evaluate at an invertible x of any field-like type.
  template <typename X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    X shift(1);
    X base = offset_ < 0 ? X(1) / x : x;
    for (long k = offset_ < 0 ? -offset_ : offset_; k > 0; --k) shift *= base;
    return acc * shift;
  }

  /// Substitute q -> q^-1.
  LaurentPolynomial inv_q() const {
    std::vector<Scalar> r(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPolynomial(-high(), std::move(r));
  }

  /// Multiply by q^k.
  LaurentPolynomial shift(long k) const {
    LaurentPolynomial r = *this;
    if (!r.is_zero()) r.offset_ += k;
    return r;
  }

  /// Units of Z[q, q^-1] are exactly +-q^k.
  bool is_unit() const {
    return coeffs_.size() == 1 && (coeffs_[0] == Scalar(1) || coeffs_[0] == Scalar(-1));
  }

  bool is_palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j--; ++i) {
      if (coeffs_[i] != coeffs_[j]) return false;
    }
    return true;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return accumulate(o, 1); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return accumulate(o, -1); }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPolynomial(a.offset_ + b.offset_, std::move(out));
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const Scalar& s) {
    return a * LaurentPolynomial(s);
  }
  friend LaurentPolynomial operator*(const Scalar& s, const LaurentPolynomial& a) {
    return a * LaurentPolynomial(s);
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  LaurentPolynomial& accumulate(const LaurentPolynomial& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    long lo = std::min(low(), o.low());
    long hi = std::max(high(), o.high());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(offset_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(o.offset_ - lo) + i];
      if (sign > 0) {
        slot += o.coeffs_[i];
      } else {
        slot -= o.coeffs_[i];
      }
    }
    offset_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == Scalar(0)) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      offset_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) offset_ = 0;
  }

  long offset_ = 0;
  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
LaurentPolynomial<Scalar> pow(const LaurentPolynomial<Scalar>& base, unsigned exponent) {
  LaurentPolynomial<Scalar> result(Scalar(1));
  LaurentPolynomial<Scalar> b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

/// Laurent polynomial in q with integer coefficients.
using LaurentPoly = LaurentPolynomial<BigInt>;

/// [a]_q = 1 + q + ... + q^(a-1); [0]_q = 0.
LaurentPoly q_int(long a);

/// Exact quotient in Z[q, q^-1]; throws NotDivisible otherwise.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in Z[q, q^-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

}  // namespace mdeform
