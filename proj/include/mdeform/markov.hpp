#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdeform/contfrac.hpp"
#include "mdeform/laurent.hpp"
#include "mdeform/mat2.hpp"
#include "mdeform/rat_func.hpp"
#include "mdeform/words.hpp"

namespace mdeform {

/// Generator pair substituted for the letters a and b.
template <typename Scalar>
struct CohnGenerators;

/// A = [[2,1],[1,1]], B = [[5,2],[2,1]].
template <>
struct CohnGenerators<BigInt> {
  static IntMat a();
  static IntMat b();
};

/// A_q = R_q L_q, B_q = R_q^2 L_q^2.
template <>
struct CohnGenerators<LaurentPoly> {
  static LaurentMat a();
  static LaurentMat b();
};

/// Substitute x for a and y for b and multiply left to right.
template <typename Scalar>
Mat2<Scalar> evaluate_word(const Word& w, const Mat2<Scalar>& x, const Mat2<Scalar>& y) {
  Mat2<Scalar> m = identity2<Scalar>();
  for (char c : w.letters()) m = (m * (c == 'a' ? x : y)).eval();
  return m;
}

template <typename Scalar>
Mat2<Scalar> cohn_matrix(const Word& w) {
  return evaluate_word(w, CohnGenerators<Scalar>::a(), CohnGenerators<Scalar>::b());
}

template <typename Scalar>
struct CohnTriple {
  Mat2<Scalar> m1, m12, m2;
  WordTriple words;
};

template <typename Scalar>
CohnTriple<Scalar> cohn_triple(const WordTriple& t) {
  return {cohn_matrix<Scalar>(t.left), cohn_matrix<Scalar>(t.middle), cohn_matrix<Scalar>(t.right), t};
}

/// Tr(w(A,B)) / 3; throws NotDivisible if the trace is not a multiple of 3.
BigInt markov_number(const Word& w);
std::array<BigInt, 3> markov_triple(const WordTriple& t);
bool is_markov_triple(const BigInt& x, const BigInt& y, const BigInt& z);

/// h_w(q) = Tr(w(A_q,B_q)) / [3]_q, checked against q m12 - (q-1) m22.
LaurentPoly q_markov_value(const Word& w);

/// q m12 - (q-1) m22 for w(A_q,B_q) = [[m11,m12],[m21,m22]].
LaurentPoly entry_form(const LaurentMat& m);

struct QMarkovTriple {
  LaurentPoly x, y, z;
  friend bool operator==(const QMarkovTriple&, const QMarkovTriple&) = default;
};

QMarkovTriple q_markov_triple(const WordTriple& t);

/// Outcome of an exact identity check; the residual is lhs - rhs.
template <typename Value>
struct Check {
  bool ok = false;
  Value residual{};
  Value lhs{};
  Value rhs{};
};

/// (q-1)^2 / q^3.
LaurentPoly q_markov_constant();

/// x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q xyz.
Check<LaurentPoly> verify_q_markov(const QMarkovTriple& t);
/// The same equation multiplied through by [3]_q^2, in terms of traces.
Check<LaurentPoly> verify_q_markov_scaled(const QMarkovTriple& t);

enum class Slot { x, y, z };

/// Replace one slot by [3]_q times the other two minus itself.
QMarkovTriple vieta_move(const QMarkovTriple& t, Slot slot);

/// x^2 + y^2 + z^2 - [3]_q xyz; equals -(q-1)^2/q^3 on solutions.
LaurentPoly near_orthogonality(const QMarkovTriple& t);

/// Tr(M N M^-1 N^-1) + 2 for M, N the outer matrices of the triple.
template <typename Scalar>
Scalar commutator_trace_plus_two(const CohnTriple<Scalar>& t) {
  return trace(commutator(t.m1, t.m2)) + Scalar(2);
}

/// Tr([M,N]) + 2 = -(q-1)^2 [3]_q^2 / q^3.
Check<LaurentPoly> commutator_trace_check(const CohnTriple<LaurentPoly>& t);

/// Tr(X)^2 + Tr(XY)^2 + Tr(Y)^2 = Tr(X)Tr(XY)Tr(Y) + Tr([X,Y]) + 2 for
/// unimodular X, Y; throws NotUnimodular otherwise.
template <typename Scalar>
Check<Scalar> fricke_check(const Mat2<Scalar>& x, const Mat2<Scalar>& y) {
  if (!(det(x) == Scalar(1)) || !(det(y) == Scalar(1))) throw NotUnimodular("Fricke identity needs determinant 1");
  Mat2<Scalar> xy = (x * y).eval();
  Scalar tx = trace(x), ty = trace(y), txy = trace(xy);
  Check<Scalar> c;
  c.lhs = tx * tx + txy * txy + ty * ty;
  c.rhs = tx * txy * ty + trace(commutator(x, y)) + Scalar(2);
  c.residual = c.lhs - c.rhs;
  c.ok = c.residual == Scalar(0);
  return c;
}

/// (N + sqrt(D)) / S with N, D, S Laurent polynomials in q. D is an
/// ordinary polynomial with nonzero constant term.
struct QuadraticSurd {
  LaurentPoly numerator;
  LaurentPoly radicand;
  LaurentPoly denominator;
  /// Tr^2 - 4 = radicand * q^-scale.
  long scale = 0;

  /// Rational and irrational parts of s*theta^2 + (u-r)*theta - t, scaled by S^2.
  std::pair<LaurentPoly, LaurentPoly> quadratic_residual(const LaurentMat& m) const;
  /// Value at q = 1 as (n, d, s) meaning (n + sqrt(d)) / s.
  std::array<BigInt, 3> at_one() const;
};

struct FixedPoint {
  Word word;
  LaurentMat matrix;
  QuadraticSurd surd;
  /// a -> 1,1 and b -> 2,2.
  CFRegular period;
};

/// The '+' root of s theta^2 + (u - r) theta - t = 0 for w(A_q,B_q) = [[r,t],[s,u]].
FixedPoint fixed_point(const Word& w);

CFRegular period_of_word(const Word& w);

/// (x, y, z) the (1,2) entries of the q-Cohn triple, x' = h_w:
/// x^2/q^3 + y^2 + z^2 = [3]_q x' y z.
Check<LaurentPoly> alt_deformation_1(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                     const LaurentPoly& x_prime);
Check<LaurentPoly> verify_alt_deformation_1(const WordTriple& t);

/// Exponent window [first, first + size).
struct ExponentWindow {
  long first = -64;
  long size = 129;
};

struct Alt2Result {
  long exponent;
  Check<LaurentPoly> check;
};

/// (x, y, z) = (h_w1, h_w1w2, h_w2), y' = (w1w2)_{12}(q^-1) q^e, z' = (w2)_{12}:
/// x^2/q^3 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q x y' z'. Searches e in the window
/// and throws NoExponentFound if none works.
Alt2Result verify_alt_deformation_2(const WordTriple& t, ExponentWindow window = {});

/// The two sides of the second alternative equation at a given exponent.
Check<LaurentPoly> alt_deformation_2_at(const WordTriple& t, long exponent);

std::vector<TripleNode<BigInt>> markov_tree(int depth);
std::vector<TripleNode<LaurentPoly>> q_markov_tree(int depth);

}  // namespace mdeform
