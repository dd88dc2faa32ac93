#include "mdeform/castling.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mdeform/io.hpp"

namespace mdeform {

namespace {

std::string tuple_key(const CastlingTuple<IntPoly>& c) {
  std::string key;
  for (const auto& e : c.entries) {
    for (const auto& x : e.coeffs()) key += x.str() + ',';
    key += ';';
  }
  return key;
}

long max_degree_of(const CastlingTuple<IntPoly>& c) {
  long d = 0;
  for (const auto& e : c.entries) d = std::max(d, e.degree());
  return d;
}

bool has_zero(const std::vector<IntPoly>& xs) {
  return std::any_of(xs.begin(), xs.end(), [](const IntPoly& p) { return p.is_zero(); });
}

// Exponent of the single differing coefficient, if exactly one differs.
std::optional<long> one_coefficient_apart(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  std::optional<long> at;
  for (long i = 0; i <= a.degree(); ++i) {
    auto k = static_cast<std::size_t>(i);
    if (a.coeffs()[k] != b.coeffs()[k]) {
      if (at) return std::nullopt;
      at = i;
    }
  }
  return at;
}

IntPoly x_of_t() { return IntPoly{0, -1, 1}; }

}  // namespace

std::string format(const CastlingTuple<BigInt>& c) {
  std::string out = "(" + c.dim.str();
  for (std::size_t i = 0; i < c.entries.size(); ++i) out += (i ? ", " : "; ") + c.entries[i].str();
  return out + ")";
}

std::string format(const CastlingTuple<IntPoly>& c) {
  std::string out = "(" + format(c.dim);
  for (std::size_t i = 0; i < c.entries.size(); ++i) out += (i ? ", " : "; ") + format(c.entries[i]);
  return out + ")";
}

IntPoly t_var() { return IntPoly::variable(); }

TMarkovTriple t_markov_root() { return {IntPoly(1), IntPoly{-1, -1, 1}, IntPoly{-1, 1}}; }

std::pair<TMarkovTriple, TMarkovTriple> t_markov_children(const TMarkovTriple& m) {
  IntPoly t = t_var();
  return {TMarkovTriple{m.x, t * m.x * m.y - m.z, m.y}, TMarkovTriple{m.y, t * m.y * m.z - m.x, m.z}};
}

std::vector<TripleNode<IntPoly>> t_markov_tree(int depth) {
  std::vector<TripleNode<IntPoly>> out;
  if (depth < 1) return out;
  std::deque<std::pair<TripleNode<IntPoly>, TMarkovTriple>> queue;
  auto r = t_markov_root();
  queue.push_back({{triple_root(), {r.x, r.y, r.z}, "", 1}, r});
  while (!queue.empty()) {
    auto [node, m] = std::move(queue.front());
    queue.pop_front();
    if (node.depth < depth) {
      auto [lw, rw] = triple_children(node.words);
      auto [lm, rm] = t_markov_children(m);
      queue.push_back({{lw, {lm.x, lm.y, lm.z}, node.path + "L", node.depth + 1}, lm});
      queue.push_back({{rw, {rm.x, rm.y, rm.z}, node.path + "R", node.depth + 1}, rm});
    }
    out.push_back(std::move(node));
  }
  return out;
}

IntPoly t_markov_value(const Word& w) {
  auto root = t_markov_root();
  if (w == Word("a")) return root.x;
  if (w == Word("b")) return root.z;
  auto ft = locate_word(w);
  if (!ft) throw OutOfRange(w.compact() + " is not a Christoffel word");
  TMarkovTriple m = root;
  for (char step : ft->path) {
    auto [l, r] = t_markov_children(m);
    m = step == 'L' ? l : r;
  }
  return m.y;
}

TMarkovTriple t_markov_triple(const WordTriple& t) {
  return {t_markov_value(t.left), t_markov_value(t.middle), t_markov_value(t.right)};
}

Check<IntPoly> verify_t_markov(const TMarkovTriple& m) {
  IntPoly t = t_var();
  Check<IntPoly> c;
  c.lhs = m.x * m.x + m.y * m.y + m.z * m.z + (t - IntPoly(3));
  c.rhs = t * m.x * m.y * m.z;
  c.residual = c.lhs - c.rhs;
  c.ok = c.residual.is_zero();
  return c;
}

PVLabel PVLabel::sorted() const {
  std::array<BigInt, 3> v{m1, m2, m3};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::string PVLabel::render() const {
  PVLabel s = sorted();
  std::ostringstream out;
  out << "(SO(3) × GL(" << s.m1 << ") × GL(" << s.m2 << ") × GL(" << s.m3 << "), V(3)⊗V(" << s.m1 << ")⊗V("
      << s.m2 << ")⊗V(" << s.m3 << "))";
  return out.str();
}

std::vector<PVLabel> markov_subtree_scan(const CastlingTuple<BigInt>& start, const BigInt& budget,
                                         std::size_t max_entries) {
  auto within = [&](const CastlingTuple<BigInt>& c) {
    return std::all_of(c.entries.begin(), c.entries.end(), [&](const BigInt& e) { return e >= 1 && e <= budget; });
  };
  std::set<std::vector<BigInt>> seen;
  std::set<PVLabel> labels;
  std::deque<CastlingTuple<BigInt>> queue;
  auto visit = [&](CastlingTuple<BigInt> c) {
    c = canonical(std::move(c));
    if (!within(c) || !seen.insert(c.entries).second) return;
    if (c.entries.size() == max_entries && max_entries == 3) labels.insert({c.entries[0], c.entries[1], c.entries[2]});
    queue.push_back(std::move(c));
  };
  visit(start);
  while (!queue.empty()) {
    auto c = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < c.entries.size(); ++i) visit(ct_flat(c, i));
    if (c.entries.size() < max_entries) visit(ct_up(c));
  }
  return {labels.begin(), labels.end()};
}

std::vector<PVLabel> markov_subtree_scan(const BigInt& budget) {
  return markov_subtree_scan(CastlingTuple<BigInt>{BigInt(3), {BigInt(1), BigInt(1), BigInt(2)}}, budget, 3);
}

SearchReport figure4_search(const std::vector<std::pair<std::string, IntPoly>>& targets, long max_degree,
                            std::size_t max_len) {
  struct Visit {
    CastlingTuple<IntPoly> tuple;
    std::string parent;
    std::string move;
  };
  std::unordered_map<std::string, Visit> seen;
  std::vector<std::string> order;
  std::deque<std::string> queue;
  auto admit = [&](CastlingTuple<IntPoly> c, const std::string& parent, std::string move) {
    if (has_zero(c.entries) || max_degree_of(c) > max_degree || c.entries.size() > max_len) return;
    c = canonical(std::move(c));
    std::string key = tuple_key(c);
    if (seen.count(key)) return;
    seen.emplace(key, Visit{std::move(c), parent, std::move(move)});
    order.push_back(key);
    queue.push_back(key);
  };
  admit(CastlingTuple<IntPoly>{t_var(), {IntPoly(1)}}, "", "start");
  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    CastlingTuple<IntPoly> c = seen.at(key).tuple;
    admit(ct_up(c), key, "up");
    for (std::size_t i = 0; i < c.entries.size(); ++i) admit(ct_flat(c, i), key, "flat " + std::to_string(i + 1));
  }

  SearchReport report;
  report.states = seen.size();
  report.max_degree = max_degree;
  report.max_len = max_len;
  for (const auto& [name, target] : targets) {
    TargetOutcome outcome{name, target, false, {}, {}};
    for (const auto& key : order) {
      const auto& entries = seen.at(key).tuple.entries;
      if (std::find(entries.begin(), entries.end(), target) == entries.end()) continue;
      outcome.found = true;
      for (std::string k = key; !k.empty(); k = seen.at(k).parent) {
        outcome.path.push_back({seen.at(k).move, seen.at(k).tuple});
      }
      std::reverse(outcome.path.begin(), outcome.path.end());
      break;
    }
    if (!outcome.found) {
      std::set<std::vector<BigInt>> listed;
      for (const auto& key : order) {
        for (const auto& e : seen.at(key).tuple.entries) {
          auto at = one_coefficient_apart(e, target);
          if (at && listed.insert(e.coeffs()).second) outcome.near_misses.push_back({e, *at});
        }
      }
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

IntPoly chebyshev_t(long n) {
  if (n < 0) throw OutOfRange("Chebyshev index must be nonnegative");
  IntPoly x = t_var(), prev(2), cur = x;
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly chebyshev_u(long n) {
  if (n == -1) return IntPoly();
  if (n < -1) throw OutOfRange("Chebyshev index must be at least -1");
  IntPoly x = t_var(), prev(1), cur = x;
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly bareiss_determinant(Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw OutOfRange("determinant of a non-square matrix");
  if (n == 0) return IntPoly(1);
  IntPoly sign(1), prev_pivot(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return IntPoly();
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev_pivot);
      }
      m(i, k) = IntPoly();
    }
    prev_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SPolyForms s_poly_forms(long n) {
  if (n < 1) throw OutOfRange("S_n needs n >= 1");
  IntPoly t = t_var();
  SPolyForms f;
  IntPoly prev(1), cur{-1, 1};
  for (long k = 1; k < n; ++k) {
    IntPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  f.recurrence = cur;
  f.chebyshev = chebyshev_u(n) - chebyshev_u(n - 1);
  Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = i == 0 ? t - IntPoly(1) : t;
      } else if (i - j == 1 || j - i == 1) {
        m(i, j) = IntPoly(1);
      } else {
        m(i, j) = IntPoly();
      }
    }
  }
  f.determinant = bareiss_determinant(std::move(m));
  return f;
}

IntPoly s_poly(long n) {
  auto f = s_poly_forms(n);
  if (!f.agree()) throw Error("the three forms of S_" + std::to_string(n) + " disagree");
  return f.recurrence;
}

IntPoly p_poly(long n) {
  IntPoly x = x_of_t();
  return divexact(compose(chebyshev_t(n), x) + (x - IntPoly(2)) * compose(chebyshev_u(n - 1), x), BigInt(2));
}

IntPoly q_poly(long n) {
  IntPoly x = x_of_t();
  return divexact(compose(chebyshev_t(n), x) + (x + IntPoly(2)) * compose(chebyshev_u(n - 1), x), BigInt(2));
}

IntPoly f_ab_power(long n) {
  if (n < 1) throw OutOfRange("f_{ab^n} needs n >= 1");
  return p_poly(n);
}

PQReport pq_recurrence_check(long n_max) {
  PQReport r;
  IntPoly t = t_var();
  IntPoly x = x_of_t();
  IntPoly t2m4 = t * t - IntPoly(4);
  IntPoly t4m4 = t * t * t * t - IntPoly(4);
  auto note = [&](bool& flag, bool holds, long n) {
    if (!holds) {
      if (flag && r.first_failure < 0) r.first_failure = n;
      flag = false;
    }
  };
  for (long n = 0; n <= n_max; ++n) {
    note(r.p_step, p_poly(n + 2) - p_poly(n) == (x - IntPoly(2)) * q_poly(n + 1), n);
    note(r.q_step, q_poly(n + 2) - q_poly(n) == (x + IntPoly(2)) * p_poly(n + 1), n);
    IntPoly dt = chebyshev_t(n + 2) - chebyshev_t(n);
    note(r.t_step, dt == t2m4 * chebyshev_u(n), n);
    note(r.u_step, chebyshev_u(n + 2) - chebyshev_u(n) == chebyshev_t(n + 2), n);
    if (!(dt == t4m4 * chebyshev_u(n))) r.printed_t_step = false;
  }
  return r;
}

PVResult pv_of_fraction(const BigRational& f) {
  if (f <= 0 || f > 1) throw OutOfRange("PV label needs 0 < f <= 1, got " + to_string(f));
  if (f == 1) {
    PVResult r;
    r.label = {markov_number(Word("a")), markov_number(Word("b")), BigInt(1)};
    r.word = Word("b");
    r.left = 0;
    r.middle = 1;
    r.right = 0;  // stands for 1/0
    return r;
  }
  auto ft = farey_triple(f);
  auto m = markov_triple(ft.words);
  PVResult r;
  r.label = {m[0], m[1], m[2]};
  r.words = ft.words;
  r.word = ft.words.middle;
  r.left = ft.left;
  r.middle = ft.middle;
  r.right = ft.right;
  return r;
}

}  // namespace mdeform
