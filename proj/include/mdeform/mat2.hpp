#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <string>

#include "mdeform/bigint.hpp"
#include "mdeform/errors.hpp"
#include "mdeform/laurent.hpp"
#include "mdeform/polynomial.hpp"
#include "mdeform/rat_func.hpp"

namespace mdeform::detail {

template <typename Ring>
struct RingNumTraits : Eigen::GenericNumTraits<Ring> {
  using Real = Ring;
  using NonInteger = Ring;
  using Literal = Ring;
  using Nested = Ring;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
};

}  // namespace mdeform::detail

namespace Eigen {
template <>
struct NumTraits<mdeform::IntPoly> : mdeform::detail::RingNumTraits<mdeform::IntPoly> {};
template <>
struct NumTraits<mdeform::LaurentPoly> : mdeform::detail::RingNumTraits<mdeform::LaurentPoly> {};
template <>
struct NumTraits<mdeform::RatFunc> : mdeform::detail::RingNumTraits<mdeform::RatFunc> {};
}  // namespace Eigen

namespace mdeform {

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using IntMat = Mat2<BigInt>;
using LaurentMat = Mat2<LaurentPoly>;
using RatMat = Mat2<RatFunc>;

template <typename Scalar>
Mat2<Scalar> make_mat2(Scalar a11, Scalar a12, Scalar a21, Scalar a22) {
  Mat2<Scalar> m;
  m(0, 0) = std::move(a11);
  m(0, 1) = std::move(a12);
  m(1, 0) = std::move(a21);
  m(1, 1) = std::move(a22);
  return m;
}

template <typename Scalar>
Mat2<Scalar> identity2() {
  return make_mat2(Scalar(1), Scalar(0), Scalar(0), Scalar(1));
}

template <typename Scalar>
Scalar trace(const Mat2<Scalar>& m) {
  return m(0, 0) + m(1, 1);
}

template <typename Scalar>
Scalar det(const Mat2<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
inline bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
inline bool is_unit(const RatFunc& x) { return !x.is_zero(); }
inline bool is_unit(const IntPoly& x) {
  return x.degree() == 0 && is_unit(x.leading());
}

inline BigInt unit_inverse(const BigInt& x) { return x; }
inline IntPoly unit_inverse(const IntPoly& x) { return x; }
inline LaurentPoly unit_inverse(const LaurentPoly& x) {
  return LaurentPoly::monomial(-x.low(), x.leading());
}
inline RatFunc unit_inverse(const RatFunc& x) { return x.inverse(); }

/// Inverse over the coefficient ring; the determinant must be a unit there.
template <typename Scalar>
Mat2<Scalar> inverse(const Mat2<Scalar>& m) {
  Scalar d = det(m);
  if (!is_unit(d)) throw NotInvertible("determinant is not a unit of the coefficient ring");
  Scalar di = unit_inverse(d);
  return make_mat2<Scalar>(m(1, 1) * di, -m(0, 1) * di, -m(1, 0) * di, m(0, 0) * di);
}

template <typename Scalar>
Mat2<Scalar> power(const Mat2<Scalar>& base, unsigned exponent) {
  Mat2<Scalar> result = identity2<Scalar>();
  Mat2<Scalar> b = base;
  while (exponent) {
    if (exponent & 1u) result = (result * b).eval();
    exponent >>= 1u;
    if (exponent) b = (b * b).eval();
  }
  return result;
}

template <typename Scalar>
Mat2<Scalar> commutator(const Mat2<Scalar>& x, const Mat2<Scalar>& y) {
  return (x * y * inverse(x) * inverse(y)).eval();
}

/// Entrywise image under a ring map.
template <typename To, typename From, typename F>
Mat2<To> map_entries(const Mat2<From>& m, F&& f) {
  return make_mat2<To>(f(m(0, 0)), f(m(0, 1)), f(m(1, 0)), f(m(1, 1)));
}

}  // namespace mdeform
