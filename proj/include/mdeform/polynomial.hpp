#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mdeform/bigint.hpp"

namespace mdeform {

/// Dense univariate polynomial. Coefficient i multiplies x^i; the
/// coefficient vector never ends in a zero, so the zero polynomial is empty
/// and equality is structural.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(Scalar constant) {
    if (constant != Scalar(0)) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(int constant) : Polynomial(Scalar(constant)) {}
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(std::size_t degree, Scalar coeff = Scalar(1)) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  template <typename X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator+(Polynomial a, const Scalar& s) { return a += Polynomial(s); }
  friend Polynomial operator-(Polynomial a, const Scalar& s) { return a -= Polynomial(s); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, unsigned exponent) {
  Polynomial<Scalar> result(Scalar(1));
  Polynomial<Scalar> b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

/// p(inner), by Horner's rule.
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& inner) {
  Polynomial<Scalar> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial<Scalar>(*it);
  return acc;
}

/// Ordering used for canonical multisets: degree first, then coefficients
/// compared from the leading term down.
template <typename Scalar>
bool canonical_less(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

/// Polynomial in t with integer coefficients.
using IntPoly = Polynomial<BigInt>;

BigInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Exact quotient a / b in Z[t]; throws NotDivisible otherwise.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
IntPoly divexact(const IntPoly& a, const BigInt& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// gcd in Z[t], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

BigRational evaluate(const IntPoly& p, const BigRational& x);

}  // namespace mdeform
