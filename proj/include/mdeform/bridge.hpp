#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdeform/markov.hpp"
#include "mdeform/rat_func.hpp"
#include "mdeform/words.hpp"

namespace mdeform {

/// (1 + q + q^2) / q, the value substituted for t.
RatFunc bridge_point();

/// f_w((1 + q + q^2) / q) against q h_w(q), compared in RatFunc normal form.
Check<RatFunc> bridge_check(const Word& w);

struct TransportReport {
  bool ok = true;
  std::size_t triples = 0;
  /// (q - 1)^2 / q^3 * q^2 = (1 + q + q^2) / q - 3.
  bool constant_ok = false;
  std::optional<WordTriple> first_failure;
  Check<LaurentPoly> failure;
};

/// For every triple to the given depth, (X, Y, Z) = q (h_w, h_ww', h_w') satisfies
/// X^2 + Y^2 + Z^2 + (s - 3) = s X Y Z with s = (1 + q + q^2) / q.
TransportReport equation_transport_check(int depth);

}  // namespace mdeform
