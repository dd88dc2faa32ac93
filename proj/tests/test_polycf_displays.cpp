#include <doctest.h>

#include "mdeform/castling.hpp"
#include "mdeform/contfrac.hpp"
#include "mdeform/errors.hpp"
#include "mdeform/errata.hpp"
#include "mdeform/io.hpp"
#include "mdeform/tables.hpp"

using namespace mdeform;

// Every printed display x0 + 1/(x1 + 1/(...)) against the ratio of the two
// labelled tree polynomials. Only some of them hold; see the erratum ledger.

TEST_CASE("printed continued fractions of castling polynomials") {
  for (const auto& d : tables::polycf_displays()) {
    CAPTURE(d.numerator);
    CAPTURE(d.denominator);
    auto [num, den] = polycf_eval(errata::quotients_of(d));
    IntPoly fn = t_markov_value(Word::parse(d.numerator));
    IntPoly fd;
    bool christoffel = true;
    try {
      fd = t_markov_value(Word::parse(d.denominator));
    } catch (const OutOfRange&) {
      christoffel = false;
    }
    CHECK_MESSAGE(christoffel, "denominator label is not a Christoffel word");
    if (christoffel) CHECK(num * fd == den * fn);
  }
}

TEST_CASE("first display holds") {
  auto o = errata::evaluate_display(tables::polycf_displays().front());
  CHECK(o.matches);
  IntPoly fn = t_markov_value(Word::parse("a3ba3ba2b"));
  CHECK((o.num == fn || o.num == -fn));
}
