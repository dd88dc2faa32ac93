#include <doctest.h>

#include <random>

#include "mdeform/errors.hpp"
#include "mdeform/io.hpp"
#include "mdeform/laurent.hpp"
#include "mdeform/mat2.hpp"
#include "mdeform/rat_func.hpp"
#include "test_support.hpp"

using namespace mdeform;
using testing_support::sparse;
using testing_support::terms_of;

namespace {

LaurentPoly L(long offset, std::initializer_list<BigInt> c) { return LaurentPoly(offset, c); }
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly one(1);

// A_q and B_q written out entry by entry.
LaurentMat a_q() { return make_mat2(q + one, q.shift(-2), one, q.shift(-2)); }
LaurentMat b_q() {
  return make_mat2(L(-1, {1, 2, 1, 1}), L(-2, {1, 1}), L(-1, {1, 1}), L(-2, {1}));
}

}  // namespace

TEST_CASE("bigint and rational parsing round-trip") {
  BigInt big = parse_bigint("-123456789012345678901234567890");
  CHECK(to_string(big) == "-123456789012345678901234567890");
  CHECK(to_string(parse_bigint("-0")) == "0");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
}

TEST_CASE("laurent canonical form") {
  LaurentPoly p(-2, {0, 0, 3, 0});
  CHECK(p.low() == 0);
  CHECK(p.coeffs() == std::vector<BigInt>{3});
  CHECK(LaurentPoly(5, {0, 0}) == LaurentPoly());
  CHECK(LaurentPoly().offset() == 0);
  LaurentPoly again(p.offset(), p.coeffs());
  CHECK(again == p);
}

TEST_CASE("laurent multiplication examples") {
  CHECK((q + one) * (q - one) == L(0, {-1, 0, 1}));
  CHECK(L(0, {1, 1, 1}) * q.shift(-2) == L(-1, {1, 1, 1}));
  auto square = q_int(2) * q_int(2);
  CHECK(terms_of(square) == testing_support::schoolbook_multiply(sparse({{0, 1}, {1, 1}}), sparse({{0, 1}, {1, 1}})));
  CHECK(square == L(0, {1, 2, 1}));
}

TEST_CASE("laurent exact division") {
  auto three = q_int(3);
  CHECK(divexact(three * (q - one), three) == q - one);
  LaurentPoly tr = trace(LaurentMat((a_q() * b_q()).eval()));
  CHECK(divexact(tr, three) == L(-3, {1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(divexact(q + one, q - one), NotDivisible);
  CHECK_THROWS_AS(divexact(q, LaurentPoly()), NotDivisible);
}

TEST_CASE("matrix algebra over the Laurent ring") {
  CHECK(det(a_q()) == one);
  CHECK(det(b_q()) == one);
  IntMat a = make_mat2<BigInt>(2, 1, 1, 1);
  IntMat b = make_mat2<BigInt>(5, 2, 2, 1);
  IntMat ab = a * b;
  CHECK(ab == make_mat2<BigInt>(12, 5, 7, 3));
  CHECK(trace(ab) == 15);
  CHECK(IntMat(identity2<BigInt>() * ab) == ab);
  CHECK(LaurentMat(inverse(a_q()) * a_q()) == identity2<LaurentPoly>());
  CHECK_THROWS_AS(inverse(make_mat2<BigInt>(2, 0, 0, 1)), NotInvertible);
  auto scaled = make_mat2<LaurentPoly>(q, LaurentPoly(), LaurentPoly(), one);
  CHECK(LaurentMat(inverse(scaled) * scaled) == identity2<LaurentPoly>());
}

TEST_CASE("evaluation") {
  LaurentPoly h_a2b = L(-4, {1, 2, 2, 3, 2, 2, 1});
  CHECK(h_a2b.eval_at_one() == 13);
  IntPoly f_ab{-1, -1, 1};
  CHECK(evaluate(f_ab, BigRational(3)) == 5);
  CHECK(evaluate(IntPoly(), BigRational(7, 3)) == 0);
  CHECK(h_a2b.eval(BigRational(1)) == 13);
  CHECK(q.shift(-3).eval(BigRational(2)) == BigRational(1, 4));
}

TEST_CASE("composition of a t-polynomial with a rational function") {
  RatFunc s(L(-1, {1, 1, 1}));
  CHECK(compose(IntPoly{0, 1}, s) == s);
  CHECK(compose(IntPoly{-1, -1, 1}, s) == RatFunc(L(-2, {1, 1, 1, 1, 1})));
  CHECK(compose(IntPoly{1, -2, -1, 1}, s) == RatFunc(L(-3, {1, 2, 2, 3, 2, 2, 1})));
}

TEST_CASE("rational function normal form") {
  RatFunc f(L(0, {2, 2}), L(0, {-4, 0, 4}));  // 2(1+q) / 4(q^2-1)
  CHECK(f.num() == LaurentPoly(1));
  CHECK(f.den() == L(0, {-2, 2}));
  RatFunc g(L(3, {1}), L(5, {1, 1}));
  CHECK(g.num() == q.shift(-3));
  CHECK(g.den() == L(0, {1, 1}));
  CHECK(RatFunc(g.num(), g.den()) == g);
  CHECK(g.eval_at_one() == BigRational(1, 2));
  CHECK_THROWS_AS(RatFunc(one, LaurentPoly()), ZeroDenominator);
}

TEST_CASE("gcd over Z[t]") {
  IntPoly a{-1, 0, 1};   // t^2 - 1
  IntPoly b{1, 2, 1};    // (t+1)^2
  CHECK(gcd(a, b) == IntPoly{1, 1});
  CHECK(gcd(a * BigInt(6), b * BigInt(4)) == IntPoly{2, 2});
  CHECK(gcd(IntPoly{1, 1}, IntPoly{-1, 1}) == IntPoly(1));
}

TEST_CASE("json and text encodings") {
  LaurentPoly h = L(-3, {1, 1, 1, 1, 1});
  CHECK(to_json(h).dump() == R"({"coeffs":["1","1","1","1","1"],"offset":-3})");
  CHECK(laurent_from_json(to_json(h)) == h);
  IntPoly f{-1, 1, 0, -2, 1};
  CHECK(intpoly_from_json(to_json(f)) == f);
  CHECK(format(f) == "t^4 - 2t^3 + t - 1");
  CHECK(parse_intpoly("t^4-2t^3+t-1") == f);
  CHECK(parse_laurent("q^-2 + 1") == L(-2, {1, 0, 1}));
  CHECK(format(L(-2, {1, 0, 1})) == "1 + q^-2");
  RatFunc r(L(0, {1, 2, 1, 1}), L(0, {1, 1}));
  CHECK(ratfunc_from_json(to_json(r)) == r);
  CHECK(to_json(make_mat2<BigInt>(12, 5, 7, 3)).dump() == R"(["12","5","7","3"])");
  CHECK_THROWS_AS(parse_intpoly("t^-1"), ParseError);
  CHECK_THROWS_AS(parse_intpoly("t t"), ParseError);
}

TEST_CASE("ring axioms on random Laurent and integer polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testing_support::random_laurent(rng);
    auto b = testing_support::random_laurent(rng);
    auto c = testing_support::random_laurent(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(terms_of(a * b) == testing_support::schoolbook_multiply(terms_of(a), terms_of(b)));
    CHECK(a - a == LaurentPoly());
    CHECK(a.inv_q().inv_q() == a);
    auto nz = testing_support::random_nonzero_laurent(rng);
    CHECK(divexact(a * nz, nz) == a);

    auto f = testing_support::random_intpoly(rng);
    auto g = testing_support::random_intpoly(rng);
    auto h = testing_support::random_intpoly(rng);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    if (!g.is_zero()) CHECK(divexact(f * g, g) == f);
    if (!f.is_zero() && !g.is_zero()) {
      auto d = gcd(f, g);
      CHECK(divexact(f, d) * d == f);
      CHECK(divexact(g, d) * d == g);
    }
  }
}

TEST_CASE("matrix identities on random Laurent matrices") {
  std::mt19937_64 rng(77);
  auto rnd = [&] {
    return make_mat2(testing_support::random_laurent(rng, 3, 4), testing_support::random_laurent(rng, 3, 4),
                     testing_support::random_laurent(rng, 3, 4), testing_support::random_laurent(rng, 3, 4));
  };
  for (int trial = 0; trial < 100; ++trial) {
    LaurentMat x = rnd(), y = rnd(), z = rnd();
    CHECK(LaurentMat((x * y) * z) == LaurentMat(x * (y * z)));
    CHECK(det(LaurentMat(x * y)) == det(x) * det(y));
    CHECK(trace(LaurentMat(x * y)) == trace(LaurentMat(y * x)));
  }
}

TEST_CASE("normalizing a rational function twice changes nothing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = testing_support::random_laurent(rng);
    auto d = testing_support::random_nonzero_laurent(rng);
    auto common = testing_support::random_nonzero_laurent(rng);
    RatFunc f(n * common, d * common);
    CHECK(RatFunc(f.num(), f.den()) == f);
    CHECK(f == RatFunc(n, d));
    CHECK(f.den().offset() == 0);
    CHECK(f.den().leading() > 0);
  }
}
