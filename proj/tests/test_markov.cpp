#include <doctest.h>

#include <random>
#include <set>

#include "mdeform/errors.hpp"
#include "mdeform/io.hpp"
#include "mdeform/markov.hpp"
#include "mdeform/qrat.hpp"
#include "mdeform/tables.hpp"

using namespace mdeform;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

using RatMat2 = std::array<BigRational, 4>;

RatMat2 mul(const RatMat2& x, const RatMat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// A_q and B_q written out entrywise at a rational point, no Laurent arithmetic.
RatMat2 aq_at(const BigRational& q) { return {q + 1, 1 / q, 1, 1 / q}; }
RatMat2 bq_at(const BigRational& q) {
  return {(q * q * q + q * q + 2 * q + 1) / q, (q + 1) / (q * q), (q + 1) / q, 1 / (q * q)};
}

RatMat2 word_at(const Word& w, const BigRational& q) {
  RatMat2 m{1, 0, 0, 1};
  for (char c : w.letters()) m = mul(m, c == 'a' ? aq_at(q) : bq_at(q));
  return m;
}

BigRational h_at(const Word& w, const BigRational& q) {
  RatMat2 m = word_at(w, q);
  return (m[0] + m[3]) / (1 + q + q * q);
}

// Classical Markov tree by Vieta jumping on plain integers.
struct IntTriple {
  BigInt x, y, z;
};

std::vector<IntTriple> vieta_oracle(int depth) {
  std::vector<IntTriple> level{{1, 5, 2}}, all;
  for (int d = 1; d <= depth; ++d) {
    std::vector<IntTriple> next;
    for (const auto& t : level) {
      all.push_back(t);
      next.push_back({t.x, 3 * t.x * t.y - t.z, t.y});
      next.push_back({t.y, 3 * t.y * t.z - t.x, t.z});
    }
    level = std::move(next);
  }
  return all;
}

const std::vector<BigRational> kPoints{BigRational(2), BigRational(3, 5), BigRational(-7, 2)};

}  // namespace

TEST_CASE("classical Cohn matrices") {
  IntMat ab = cohn_matrix<BigInt>(Word("ab"));
  CHECK(ab == make_mat2<BigInt>(12, 5, 7, 3));
  CHECK(trace(ab) == 15);
  CHECK(cohn_matrix<BigInt>(Word::parse("a4b"))(0, 1) == 89);
  CHECK(cohn_matrix<LaurentPoly>(Word("a")) == CohnGenerators<LaurentPoly>::a());
  auto m = markov_triple(triple_root());
  CHECK(m == std::array<BigInt, 3>{1, 5, 2});
  WordTriple t(Word::parse("abab2"), Word::parse("abab2ab2"), Word::parse("ab2"));
  CHECK(markov_triple(t)[1] == 37666);
}

TEST_CASE("classical tree to depth 6 against Vieta jumping") {
  auto nodes = markov_tree(6);
  auto oracle = vieta_oracle(6);
  REQUIRE(nodes.size() == 63);
  REQUIRE(oracle.size() == 63);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    auto m = markov_triple(n.words);
    CHECK(m == n.values);
    CHECK(n.values[0] == oracle[i].x);
    CHECK(n.values[1] == oracle[i].y);
    CHECK(n.values[2] == oracle[i].z);
    CHECK(is_markov_triple(m[0], m[1], m[2]));
    auto c = cohn_triple<BigInt>(n.words);
    CHECK(trace(c.m1) == 3 * m[0]);
    CHECK(c.m1(0, 1) == m[0]);
    CHECK(c.m12(0, 1) == m[1]);
    CHECK(c.m2(0, 1) == m[2]);
    CHECK(det(c.m12) == 1);
  }
}

TEST_CASE("h_w by exact division") {
  CHECK(q_markov_value(Word("ab")) == P("q^-3") * P("q^4+q^3+q^2+q+1"));
  CHECK(q_markov_value(Word("b")) == P("q^-2") * P("q^2+1"));
  CHECK(q_markov_value(Word("a")) == P("q^-1"));
  CHECK(q_markov_value(Word::parse("a4b")).eval_at_one() == 89);
  CHECK(q_markov_value(Word::parse("a2b")).eval_at_one() == 13);
}

TEST_CASE("printed h list against traces") {
  std::set<std::string> mismatched;
  for (const auto& row : tables::h_values()) {
    Word w = Word::parse(row.word);
    LaurentPoly h = q_markov_value(w);
    if (!(h == row.value)) mismatched.insert(w.compact());
  }
  CHECK(mismatched == std::set<std::string>{"a^4b"});
  const auto& a4b = tables::h_values()[9];
  REQUIRE(a4b.word == "a4b");
  CHECK(a4b.value.eval_at_one() == 985);
  CHECK(q_markov_value(Word::parse("a4b")).eval_at_one() == 89);
  CHECK(q_markov_value(Word::parse("ab4")) == a4b.value);
}

TEST_CASE("h_w agrees with pointwise trace evaluation") {
  for (const auto& w : enumerate_words(4)) {
    LaurentPoly h = q_markov_value(w);
    for (const auto& q : kPoints) CHECK(h.eval(q) == h_at(w, q));
    CHECK(h.eval_at_one() == markov_number(w));
  }
}

TEST_CASE("q-Markov equation, commutator and near-orthogonality to depth 5") {
  auto triples = enumerate_triples(5);
  REQUIRE(triples.size() == 31);
  LaurentPoly three = q_int(3);
  LaurentPoly constant = P("q^-1-2q^-2+q^-3");
  CHECK(q_markov_constant() == constant);
  for (const auto& t : triples) {
    auto c = cohn_triple<LaurentPoly>(t);
    CHECK(divides(three, trace(c.m1)));
    CHECK(divides(three, trace(c.m12)));
    CHECK(entry_form(c.m12) == q_markov_value(t.middle));
    auto h = q_markov_triple(t);
    CHECK(verify_q_markov(h).ok);
    CHECK(verify_q_markov_scaled(h).ok);
    CHECK(commutator_trace_check(c).ok);
    CHECK(near_orthogonality(h) == -constant);
    CHECK(commutator_trace_plus_two(cohn_triple<BigInt>(t)) == 0);
  }
}

TEST_CASE("worked q-Markov triple") {
  WordTriple t(Word::parse("a3b"), Word::parse("a3ba2b"), Word::parse("a2b"));
  CHECK(verify_q_markov(q_markov_triple(t)).ok);
  CHECK(verify_q_markov(q_markov_triple(triple_root())).ok);
  auto bad = verify_q_markov({LaurentPoly(1), LaurentPoly(1), LaurentPoly(1)});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("q-tree by Vieta moves matches traces") {
  for (const auto& n : q_markov_tree(5)) {
    CHECK(n.values[0] == q_markov_value(n.words.left));
    CHECK(n.values[1] == q_markov_value(n.words.middle));
    CHECK(n.values[2] == q_markov_value(n.words.right));
  }
}

TEST_CASE("Vieta moves") {
  auto root = q_markov_triple(triple_root());
  auto z = vieta_move(root, Slot::z);
  CHECK(z.z == q_markov_value(Word::parse("a2b")));
  CHECK(verify_q_markov(z).ok);
  auto x = vieta_move(root, Slot::x);
  CHECK(x.x == q_markov_value(Word::parse("ab2")));
  for (Slot s : {Slot::x, Slot::y, Slot::z}) CHECK(vieta_move(vieta_move(root, s), s) == root);
}

TEST_CASE("Fricke identity") {
  CHECK(fricke_check(CohnGenerators<LaurentPoly>::a(), CohnGenerators<LaurentPoly>::b()).ok);
  IntMat id = identity2<BigInt>();
  auto c = fricke_check(id, id);
  CHECK(c.ok);
  CHECK(c.lhs == 12);
  CHECK_THROWS_AS(fricke_check<BigInt>(make_mat2<BigInt>(2, 0, 0, 1), id), NotUnimodular);

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> len(1, 6), letter(0, 3);
  LaurentMat gens[4] = {CohnGenerators<LaurentPoly>::a(), CohnGenerators<LaurentPoly>::b(),
                        inverse(CohnGenerators<LaurentPoly>::a()), inverse(CohnGenerators<LaurentPoly>::b())};
  auto random_word = [&] {
    LaurentMat m = identity2<LaurentPoly>();
    for (int i = len(rng); i > 0; --i) m = (m * gens[letter(rng)]).eval();
    return m;
  };
  int passed = 0;
  for (int i = 0; i < 1000; ++i) passed += fricke_check(random_word(), random_word()).ok;
  CHECK(passed == 1000);

  std::uniform_int_distribution<int> small(-6, 6);
  for (int i = 0; i < 200; ++i) {
    // Random integer SL2 matrices as products of elementary matrices.
    auto random_sl2 = [&] {
      IntMat m = identity2<BigInt>();
      for (int k = 0; k < 4; ++k) {
        m = (m * make_mat2<BigInt>(1, small(rng), 0, 1)).eval();
        m = (m * make_mat2<BigInt>(1, 0, small(rng), 1)).eval();
      }
      return m;
    };
    CHECK(fricke_check(random_sl2(), random_sl2()).ok);
  }
}

TEST_CASE("fixed point of a^2 b") {
  auto printed = tables::fixed_point_a2b();
  auto fp = fixed_point(Word::parse("a2b"));
  CHECK(fp.surd.denominator == printed.denominator);
  CHECK(fp.surd.radicand == printed.discriminant);
  CHECK(fp.surd.numerator == printed.numerator);
  CHECK(fp.period.terms == printed.period);
  CHECK(fp.surd.radicand.is_palindromic());
  auto [rational, surd] = fp.surd.quadratic_residual(fp.matrix);
  CHECK(rational.is_zero());
  CHECK(surd.is_zero());
}

TEST_CASE("fixed point of ab at q = 1") {
  auto [n, d, s] = fixed_point(Word("ab")).surd.at_one();
  // (9 + sqrt 221) / 14 solves 7 x^2 - 9 x - 5 = 0, the fixed point of [[12,5],[7,3]].
  CHECK(s > 0);
  CHECK(n * 14 == 9 * s);
  CHECK(d * 196 == 221 * s * s);
}

TEST_CASE("fixed points to depth 4") {
  for (const auto& w : enumerate_words(4)) {
    auto fp = fixed_point(w);
    CHECK(fp.surd.radicand.low() == 0);
    CHECK(fp.surd.radicand.is_palindromic());
    auto [rational, surd] = fp.surd.quadratic_residual(fp.matrix);
    CHECK(rational.is_zero());
    CHECK(surd.is_zero());
    CHECK(fp.matrix == mq_plus(fp.period));
    CHECK(LaurentPoly(trace(fp.matrix) * trace(fp.matrix) - LaurentPoly(4)) ==
          fp.surd.radicand.shift(-fp.surd.scale));
  }
}

TEST_CASE("first alternative deformation") {
  WordTriple t(Word::parse("a3b"), Word::parse("a3ba2b"), Word::parse("a2b"));
  auto printed = tables::entries_a3b_a2b();
  auto c = cohn_triple<LaurentPoly>(t);
  CHECK(c.m1(0, 1) == printed.w1);
  CHECK(c.m2(0, 1) == printed.w2);
  CHECK(c.m12(0, 1) == printed.w1w2);
  CHECK(verify_alt_deformation_1(t).ok);
  CHECK(verify_alt_deformation_1(triple_root()).ok);
  auto h = q_markov_value(t.left);
  CHECK_FALSE(alt_deformation_1(c.m1(0, 1), c.m12(0, 1), c.m2(0, 1), h + LaurentPoly(1)).ok);
  for (const auto& tr : enumerate_triples(4)) CHECK(verify_alt_deformation_1(tr).ok);
}

TEST_CASE("second alternative deformation with an empty window") {
  WordTriple t(Word::parse("abab2"), Word::parse("abab2ab2"), Word::parse("ab2"));
  CHECK_THROWS_AS(verify_alt_deformation_2(t, ExponentWindow{0, 0}), NoExponentFound);
}

TEST_CASE("degenerate fixed point") {
  CHECK_THROWS_AS(fixed_point(Word()), DegenerateMatrix);
}
