#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mdeform/contfrac.hpp"
#include "mdeform/laurent.hpp"
#include "mdeform/polynomial.hpp"

namespace mdeform::tables {

// Values as printed in the source text, transcribed verbatim. Misprints are
// kept; the errata module compares them against computed values.

struct PrintedLaurent {
  std::string word;
  LaurentPoly value;
};

struct PrintedPoly {
  std::string word;
  IntPoly value;
};

/// h_w(q) for the listed words, in listing order.
const std::vector<PrintedLaurent>& h_values();
/// f_w(t) for the listed words, in listing order.
const std::vector<PrintedPoly>& f_values();

struct PrintedQRational {
  long r, s;
  std::vector<long> regular_label;
  std::vector<long> negative_label;
  LaurentPoly num, den;
};

/// The five worked q-rationals with their printed expansion labels.
const std::vector<PrintedQRational>& q_rationals();

/// Named targets for the bounded castling search.
const std::vector<std::pair<std::string, IntPoly>>& search_targets();

/// One quotient sign * (t if times_t) * f_word. An empty word stands for the
/// factor 1 and sign 0 for the constant 0.
struct PolyCFTerm {
  int sign = 1;
  bool times_t = false;
  std::string word;
};

struct PolyCFDisplay {
  std::string numerator;
  std::string denominator;
  std::vector<PolyCFTerm> terms;
};

const std::vector<PolyCFDisplay>& polycf_displays();

/// The integer branch listed for the scan from (3; 1, 1, 2), sorted triples.
const std::vector<std::array<long, 3>>& castling_branch();
/// The last relation as printed: 13^2 + 194^2 + 7561^2 = 57206526 = 3 * 13 * 194 * 7651.
struct PrintedRelation {
  std::array<long, 3> squares;
  long total;
  std::array<long, 3> product;
};
PrintedRelation printed_last_relation();

/// Fixed point of a^2 b as printed: numerator, denominator, discriminant.
struct PrintedFixedPoint {
  std::string word;
  LaurentPoly numerator, denominator, discriminant;
  std::vector<long> period;
};
PrintedFixedPoint fixed_point_a2b();

/// The three (1,2) entries printed for the triple (a^3 b, a^3 b a^2 b, a^2 b).
struct PrintedEntries {
  LaurentPoly w1, w2, w1w2;
};
PrintedEntries entries_a3b_a2b();

/// q h_w for the bridge examples.
const std::vector<PrintedLaurent>& bridge_values();

/// B_q as printed in the opening section and in the Markov section, row-major.
std::array<LaurentPoly, 4> bq_opening();
std::array<LaurentPoly, 4> bq_markov_section();

/// Exponent printed for the second alternative deformation on (abab^2, abab^2ab^2, ab^2).
constexpr long kAlt2PrintedExponent = 23;

}  // namespace mdeform::tables
