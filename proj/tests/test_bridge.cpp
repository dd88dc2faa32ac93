#include <doctest.h>

#include <set>

#include "mdeform/bridge.hpp"
#include "mdeform/castling.hpp"
#include "mdeform/errata.hpp"
#include "mdeform/io.hpp"
#include "mdeform/tables.hpp"

using namespace mdeform;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("bridge examples") {
  auto c = bridge_check(Word::parse("a2b"));
  CHECK(c.ok);
  CHECK(c.rhs == RatFunc(P("q^-3") * P("q^6+2q^5+2q^4+3q^3+2q^2+2q+1")));
  auto d = bridge_check(Word::parse("a2bab"));
  CHECK(d.ok);
  CHECK(t_markov_value(Word::parse("a2bab")) == parse_intpoly("t^6-2t^5-2t^4+4t^3+t^2-t-1"));
  for (const auto& row : tables::bridge_values()) {
    CHECK(bridge_check(Word::parse(row.word)).lhs == RatFunc(row.value));
  }
  auto a = bridge_check(Word("a"));
  CHECK(a.ok);
  CHECK(a.lhs == RatFunc(1));
}

TEST_CASE("bridge identity for every word to depth 6") {
  auto words = enumerate_words(6);
  CHECK(words.size() >= 60);
  for (const auto& w : words) {
    CAPTURE(w.compact());
    auto c = bridge_check(w);
    CHECK(c.ok);
    // Independent pointwise check at rational points.
    for (BigRational q0 : {BigRational(2), BigRational(-1, 3), BigRational(5, 7)}) {
      BigRational t0 = (1 + q0 + q0 * q0) / q0;
      CHECK(evaluate(t_markov_value(w), t0) == q0 * q_markov_value(w).eval(q0));
    }
    BigInt m = markov_number(w);
    CHECK(t_markov_value(w).eval(BigInt(3)) == m);
    CHECK(q_markov_value(w).shift(1).eval_at_one() == m);
  }
}

TEST_CASE("equation transport") {
  auto r1 = equation_transport_check(1);
  CHECK(r1.ok);
  CHECK(r1.constant_ok);
  CHECK(r1.triples == 1);
  auto r5 = equation_transport_check(5);
  CHECK(r5.ok);
  CHECK(r5.triples == 31);
  // (q-1)^2 / q^3 * q^2 = (1 + q + q^2) / q - 3, and it vanishes at q = 1.
  CHECK(q_markov_constant().shift(2) == P("q-2+q^-1"));
  CHECK(q_markov_constant().eval_at_one() == 0);
}

TEST_CASE("erratum ledger") {
  auto entries = errata::ledger();
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  for (const char* id : {"h-table-a^4b", "mq-plus-final-sign", "t-tree-right-child", "t-tree-f-ab2",
                         "s-poly-chebyshev", "s-poly-index-shift", "chebyshev-t-step", "markov-7561",
                         "f3a-double-listing", "bq-opening-entry", "trace-entry-form", "q-rational-label-7-5",
                         "transport-constant", "alt2-exponent"}) {
    CAPTURE(id);
    CHECK(ids.count(id) == 1);
  }
  CHECK_FALSE(ids.count("polycf-a^3ba^3ba^2b"));
  CHECK(ids.count("search-f2") == 0);
  for (const auto& e : entries) {
    if (e.id == "h-table-a^4b") {
      CHECK(e.computed.find("89") != std::string::npos);
      CHECK(e.printed.find("985") != std::string::npos);
    }
    if (e.id == "chebyshev-t-step") CHECK(e.computed.find("t^2 - 4") != std::string::npos);
  }
  auto j = errata::to_json(entries);
  CHECK(j.size() == entries.size());
  CHECK(j.dump() == errata::to_json(errata::ledger()).dump());
}
