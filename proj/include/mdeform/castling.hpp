#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mdeform/bigint.hpp"
#include "mdeform/errors.hpp"
#include "mdeform/markov.hpp"
#include "mdeform/polynomial.hpp"
#include "mdeform/words.hpp"

namespace mdeform {

/// Dimension tuple (t; f1, ..., fl). T is BigInt for a fixed t0 or IntPoly
/// for the formal t.
template <typename T>
struct CastlingTuple {
  T dim;
  std::vector<T> entries;
  friend bool operator==(const CastlingTuple&, const CastlingTuple&) = default;
};

inline bool entry_less(const BigInt& a, const BigInt& b) { return a < b; }
inline bool entry_less(const IntPoly& a, const IntPoly& b) { return canonical_less(a, b); }

template <typename T>
T product(const std::vector<T>& xs) {
  T p(1);
  for (const auto& x : xs) p = p * x;
  return p;
}

/// Append t * prod(f) - 1.
template <typename T>
CastlingTuple<T> ct_up(const CastlingTuple<T>& c) {
  CastlingTuple<T> r = c;
  r.entries.push_back(c.dim * product(c.entries) - T(1));
  return r;
}

/// Replace f_i (0-based) by t * prod_{j != i} f_j - f_i.
template <typename T>
CastlingTuple<T> ct_flat(const CastlingTuple<T>& c, std::size_t i) {
  if (i >= c.entries.size()) {
    throw IndexOutOfRange("flat index " + std::to_string(i) + " outside a tuple of " +
                          std::to_string(c.entries.size()) + " entries");
  }
  T others(1);
  for (std::size_t j = 0; j < c.entries.size(); ++j) {
    if (j != i) others = others * c.entries[j];
  }
  CastlingTuple<T> r = c;
  r.entries[i] = c.dim * others - c.entries[i];
  return r;
}

/// Entries sorted (by degree, then coefficients from the top, for polynomials).
template <typename T>
CastlingTuple<T> canonical(CastlingTuple<T> c) {
  std::sort(c.entries.begin(), c.entries.end(), [](const T& a, const T& b) { return entry_less(a, b); });
  return c;
}

std::string format(const CastlingTuple<BigInt>& c);
std::string format(const CastlingTuple<IntPoly>& c);

/// The formal variable t.
IntPoly t_var();

struct TMarkovTriple {
  IntPoly x, y, z;
  friend bool operator==(const TMarkovTriple&, const TMarkovTriple&) = default;
};

/// (f_a, f_ab, f_b) = (1, t^2 - t - 1, t - 1).
TMarkovTriple t_markov_root();
/// Left (x, t x y - z, y) and right (y, t y z - x, z).
std::pair<TMarkovTriple, TMarkovTriple> t_markov_children(const TMarkovTriple& m);
std::vector<TripleNode<IntPoly>> t_markov_tree(int depth);

/// f_w for a Christoffel word; throws OutOfRange for other words.
IntPoly t_markov_value(const Word& w);
TMarkovTriple t_markov_triple(const WordTriple& t);

/// x^2 + y^2 + z^2 + (t - 3) = t x y z.
Check<IntPoly> verify_t_markov(const TMarkovTriple& m);

struct PVLabel {
  BigInt m1, m2, m3;
  friend bool operator==(const PVLabel&, const PVLabel&) = default;
  friend bool operator<(const PVLabel& a, const PVLabel& b) {
    return std::tie(a.m1, a.m2, a.m3) < std::tie(b.m1, b.m2, b.m3);
  }
  bool is_markov() const { return is_markov_triple(m1, m2, m3); }
  PVLabel sorted() const;
  /// "(SO(3) × GL(m1) × GL(m2) × GL(m3), V(3)⊗V(m1)⊗V(m2)⊗V(m3))", ascending.
  std::string render() const;
};

/// Breadth-first closure of the start tuple under flats, and ups while the
/// tuple is shorter than max_entries, pruned at entries above the budget.
/// Returns every reachable tuple of exactly max_entries entries, sorted.
std::vector<PVLabel> markov_subtree_scan(const CastlingTuple<BigInt>& start, const BigInt& budget,
                                         std::size_t max_entries = 3);
std::vector<PVLabel> markov_subtree_scan(const BigInt& budget);

struct SearchStep {
  std::string move;
  CastlingTuple<IntPoly> tuple;
};

struct NearMiss {
  IntPoly reachable;
  long exponent;
};

struct TargetOutcome {
  std::string name;
  IntPoly target;
  bool found = false;
  std::vector<SearchStep> path;
  /// Reachable polynomials of the same degree differing in one coefficient.
  std::vector<NearMiss> near_misses;
};

struct SearchReport {
  std::size_t states = 0;
  long max_degree = 0;
  std::size_t max_len = 0;
  std::vector<TargetOutcome> outcomes;
};

/// Breadth-first search from (t; 1) over ct_up and every ct_flat, keeping
/// tuples with entry degree <= max_degree and length <= max_len.
SearchReport figure4_search(const std::vector<std::pair<std::string, IntPoly>>& targets, long max_degree = 30,
                            std::size_t max_len = 5);

/// t_0 = 2, t_1 = x, t_{n+1} = x t_n - t_{n-1}.
IntPoly chebyshev_t(long n);
/// u_0 = 1, u_1 = x, u_{n+1} = x u_n - u_{n-1}; u_{-1} = 0.
IntPoly chebyshev_u(long n);

struct SPolyForms {
  IntPoly recurrence;
  IntPoly chebyshev;
  IntPoly determinant;
  bool agree() const { return recurrence == chebyshev && chebyshev == determinant; }
};

/// S_n = f_{a^(n-1) b} three ways: S_{n+1} = t S_n - S_{n-1} from S_0 = 1,
/// S_1 = t - 1; u_n - u_{n-1}; the n x n tridiagonal determinant with
/// corner t - 1.
SPolyForms s_poly_forms(long n);
/// The common value; throws Error if the three forms disagree.
IntPoly s_poly(long n);

/// Fraction-free (Bareiss) determinant of a square matrix over Z[t].
IntPoly bareiss_determinant(Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic> m);

/// f_{ab^n} = (t_n(x) + (x - 2) u_{n-1}(x)) / 2 with x = t^2 - t.
IntPoly f_ab_power(long n);

IntPoly p_poly(long n);
IntPoly q_poly(long n);

struct PQReport {
  bool p_step = true;       // p_{n+2} - p_n = (x - 2) q_{n+1}
  bool q_step = true;       // q_{n+2} - q_n = (x + 2) p_{n+1}
  bool t_step = true;       // t_{n+2} - t_n = (t^2 - 4) u_n
  bool u_step = true;       // u_{n+2} - u_n = t_{n+2}
  bool printed_t_step = true;  // the same with (t^4 - 4)
  long first_failure = -1;
  bool ok() const { return p_step && q_step && t_step && u_step; }
};

PQReport pq_recurrence_check(long n_max);

struct PVResult {
  PVLabel label;
  /// Absent for 1/1, whose right Farey parent 1/0 carries no word.
  std::optional<WordTriple> words;
  Word word;
  BigRational left, middle, right;
};

/// Fraction -> Christoffel triple -> Markov triple, in tree order.
PVResult pv_of_fraction(const BigRational& f);

}  // namespace mdeform
