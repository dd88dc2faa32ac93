#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdeform/castling.hpp"
#include "mdeform/contfrac.hpp"
#include "mdeform/io.hpp"
#include "mdeform/tables.hpp"

namespace mdeform::errata {

/// One place where exact computation contradicts a printed value or formula.
struct Entry {
  std::string id;
  std::string topic;
  std::string printed;
  std::string computed;
};

struct DisplayOutcome {
  tables::PolyCFDisplay display;
  PolyCF quotients;
  IntPoly num, den;
  /// num / den equals f_numerator / f_denominator.
  bool matches = false;
  /// Words whose f values are num and den up to sign, searched in the tree.
  std::optional<std::pair<Word, Word>> actual;
};

/// Quotients of a display with every f taken from the t-Markov tree.
PolyCF quotients_of(const tables::PolyCFDisplay& d);
DisplayOutcome evaluate_display(const tables::PolyCFDisplay& d, int search_depth = 9);
std::vector<DisplayOutcome> evaluate_displays(int search_depth = 9);

struct Options {
  /// Run the bounded castling search and report its misses.
  bool include_search = true;
  long max_degree = 30;
  std::size_t max_len = 5;
};

/// Recomputes every comparison and lists the disagreements.
std::vector<Entry> ledger(const Options& options = {});

json to_json(const std::vector<Entry>& entries);

}  // namespace mdeform::errata
