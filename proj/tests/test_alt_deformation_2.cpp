#include <doctest.h>

#include "mdeform/errors.hpp"
#include "mdeform/markov.hpp"
#include "mdeform/tables.hpp"

using namespace mdeform;

// These follow the printed statement literally. No exponent in the search
// window balances the identity, so both cases fail; the decisions ledger
// carries the analysis.

TEST_CASE("second alternative deformation on (abab^2, abab^2ab^2, ab^2)") {
  WordTriple t(Word::parse("abab2"), Word::parse("abab2ab2"), Word::parse("ab2"));
  Alt2Result r{};
  REQUIRE_NOTHROW(r = verify_alt_deformation_2(t));
  CHECK(r.exponent == tables::kAlt2PrintedExponent);
  CHECK(r.check.ok);
}

TEST_CASE("second alternative deformation on the root triple") {
  Alt2Result r{};
  REQUIRE_NOTHROW(r = verify_alt_deformation_2(triple_root()));
  CHECK(r.check.ok);
}
