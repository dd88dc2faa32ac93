#include <doctest.h>

#include <numeric>
#include <random>

#include "mdeform/errors.hpp"
#include "mdeform/io.hpp"
#include "mdeform/qrat.hpp"

using namespace mdeform;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

QRational qr(const char* num, const char* den) { return {P(num), P(den)}; }

// The regular q-deformation evaluated directly at a rational point q0, no polynomial algebra.
BigRational regular_at(const std::vector<long>& a, const BigRational& q0) {
  auto qint = [](long n, const BigRational& base) {
    BigRational s = 0, p = 1;
    for (long i = 0; i < n; ++i, p *= base) s += p;
    return s;
  };
  auto qpow = [](const BigRational& base, long n) {
    BigRational p = 1;
    for (long i = 0; i < n; ++i) p *= base;
    return p;
  };
  BigRational inv = 1 / q0;
  BigRational acc = qint(a.back(), inv);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    bool odd = i % 2 == 0;
    acc = qint(a[i], odd ? q0 : inv) + qpow(odd ? q0 : inv, a[i]) / acc;
  }
  return acc;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0) == LaurentPoly());
  CHECK(q_int(3) == P("1+q+q^2"));
  CHECK(q_int(2).eval_at_one() == 2);
  CHECK(q_int_inv(3) == P("1+q^-1+q^-2"));
  CHECK_THROWS_AS(q_int(-1), OutOfRange);
}

TEST_CASE("worked q-rationals by both expansions") {
  struct Row {
    long r, s;
    std::vector<long> regular, negative;
    QRational expected;
  };
  std::vector<Row> rows{
      {5, 2, {2, 2}, {3, 2}, qr("1+2q+q^2+q^3", "1+q")},
      {5, 3, {1, 1, 1, 1}, {2, 3}, qr("1+q+2q^2+q^3", "1+q+q^2")},
      {7, 3, {2, 3}, {3, 2, 2}, qr("1+2q+2q^2+q^3+q^4", "1+q+q^2")},
      {7, 4, {1, 1, 2, 1}, {2, 4}, qr("1+q+2q^2+2q^3+q^4", "1+q+q^2+q^3")},
      {7, 5, {1, 2, 1, 1}, {2, 2, 3}, qr("1+q+2q^2+2q^3+q^4", "1+q+2q^2+q^3")},
  };
  for (const auto& row : rows) {
    CAPTURE(row.r);
    CAPTURE(row.s);
    BigRational x(row.r, row.s);
    CHECK(cf_regular(x).terms == row.regular);
    CHECK(cf_negative(x).terms == row.negative);
    CHECK(q_rational_regular(CFRegular{row.regular}) == row.expected);
    CHECK(q_rational_negative(CFNegative{row.negative}) == row.expected);
    CHECK(row.expected.at_one() == x);
  }
  CHECK(q_rational_regular(CFRegular{{1, 1}}) == qr("1+q", "1"));
  CHECK(q_rational_negative(CFNegative{{2}}) == qr("1+q", "1"));
}

TEST_CASE("regular and negative deformations agree for r, s up to 60") {
  for (long r = 1; r <= 60; ++r) {
    for (long s = 1; s <= 60; ++s) {
      if (std::gcd(r, s) != 1) continue;
      BigRational x(r, s);
      auto a = q_rational_regular(cf_regular(x));
      auto b = q_rational_negative(cf_negative(x));
      REQUIRE(a == b);
      CHECK(a.at_one() == x);
      CHECK(a.value().eval_at_one() == x);
      CHECK(a.num.low() >= 0);
      CHECK(a.den.low() >= 0);
    }
  }
}

TEST_CASE("regular q-deformation matches pointwise evaluation") {
  for (long r = 1; r <= 30; ++r) {
    for (long s = 1; s <= 30; ++s) {
      if (std::gcd(r, s) != 1) continue;
      auto cf = cf_regular(BigRational(r, s));
      auto v = q_rational_regular(cf);
      for (BigRational q0 : {BigRational(2), BigRational(-3, 5), BigRational(7, 2)}) {
        CHECK(v.num.eval(q0) / v.den.eval(q0) == regular_at(cf.terms, q0));
      }
    }
  }
}

TEST_CASE("matrix forms") {
  LaurentPoly q = LaurentPoly::q(), one(1);
  LaurentMat a_q = make_mat2(q + one, q.shift(-2), one, q.shift(-2));
  LaurentMat b_q = make_mat2(P("q^2+q+2+q^-1"), P("q^-1+q^-2"), P("1+q^-1"), P("q^-2"));
  CHECK(mq_plus(CFRegular{{1, 1}}) == a_q);
  CHECK(mq_plus(CFRegular{{2, 2}}) == b_q);
  CHECK(generator_product(CFRegular{{1, 1}}) == a_q);
  CHECK(generator_product(CFRegular{{2, 2}}) == b_q);
  CHECK(generator_product(CFRegular{}) == identity2<LaurentPoly>());

  auto neg = mq_neg(CFNegative{{3, 2}});
  CHECK(neg(0, 0) == P("1+2q+q^2+q^3"));
  CHECK(neg(1, 0) == P("1+q"));
  CHECK(mq_neg(CFNegative{{2}}) == make_mat2(P("1+q"), P("-q"), one, LaurentPoly()));
  auto neg53 = mq_neg(CFNegative{{2, 3}});
  CHECK(QRational{neg53(0, 0), neg53(1, 0)} == q_rational(BigRational(5, 3)));
}

TEST_CASE("first column of the plus matrix is a unit multiple of the q-rational") {
  auto m = mq_plus(CFRegular{{2, 3}});
  auto r = q_rational(BigRational(7, 3));
  auto k = unit_factor(m(0, 0), m(1, 0), r);
  REQUIRE(k.has_value());
  CHECK(*k == -2);
  // The printed q*(R, S) does not hold.
  CHECK_FALSE(m(0, 0) == LaurentPoly::q() * r.num);
  // Second column: the convergent [2]_q = 1 + q over 1, up to a unit.
  CHECK(unit_factor(m(0, 1), m(1, 1), q_rational(BigRational(2))).has_value());
}

TEST_CASE("generator products against the plus matrix on random expansions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 4), term(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    CFRegular cf;
    int pairs = len(rng);
    for (int i = 0; i < 2 * pairs; ++i) cf.terms.push_back(term(rng));
    auto g = generator_product(cf);
    CHECK(g == mq_plus(cf));
    CHECK(det(g) == LaurentPoly::monomial(alternating_sum(cf)));
    auto r = q_rational_regular(cf);
    CHECK(unit_factor(g(0, 0), g(1, 0), r).has_value());
  }
}
