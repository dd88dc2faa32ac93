#include "mdeform/bridge.hpp"

#include "mdeform/castling.hpp"

namespace mdeform {

namespace {

LaurentPoly s_laurent() { return q_int(3).shift(-1); }

}  // namespace

RatFunc bridge_point() { return RatFunc(q_int(3), LaurentPoly::q()); }

Check<RatFunc> bridge_check(const Word& w) {
  Check<RatFunc> c;
  c.lhs = compose(t_markov_value(w), bridge_point());
  c.rhs = RatFunc(q_markov_value(w).shift(1));
  c.residual = c.lhs - c.rhs;
  c.ok = c.residual.is_zero();
  return c;
}

TransportReport equation_transport_check(int depth) {
  TransportReport report;
  const LaurentPoly s = s_laurent();
  const LaurentPoly constant = s - LaurentPoly(3);
  report.constant_ok = q_markov_constant().shift(2) == constant;
  for (const auto& t : enumerate_triples(depth)) {
    ++report.triples;
    auto h = q_markov_triple(t);
    LaurentPoly x = h.x.shift(1), y = h.y.shift(1), z = h.z.shift(1);
    Check<LaurentPoly> c;
    c.lhs = x * x + y * y + z * z + constant;
    c.rhs = s * x * y * z;
    c.residual = c.lhs - c.rhs;
    c.ok = c.residual.is_zero();
    if (!c.ok && report.ok) {
      report.ok = false;
      report.first_failure = t;
      report.failure = c;
    }
  }
  report.ok = report.ok && report.constant_ok;
  return report;
}

}  // namespace mdeform
