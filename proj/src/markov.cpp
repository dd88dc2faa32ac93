#include "mdeform/markov.hpp"

#include <deque>

#include "mdeform/errors.hpp"
#include "mdeform/qrat.hpp"

namespace mdeform {

namespace {

const LaurentPoly kOne(1);

LaurentPoly three_q() { return q_int(3); }

template <typename Value>
Check<Value> compare(Value lhs, Value rhs) {
  Check<Value> c;
  c.residual = lhs - rhs;
  c.ok = c.residual == Value(0);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

// Breadth-first tree whose children come from Vieta moves on the values.
template <typename Value, typename Move>
std::vector<TripleNode<Value>> vieta_tree(int depth, std::array<Value, 3> root, Move move) {
  std::vector<TripleNode<Value>> out;
  if (depth < 1) return out;
  std::deque<TripleNode<Value>> queue;
  queue.push_back({triple_root(), std::move(root), "", 1});
  while (!queue.empty()) {
    auto node = std::move(queue.front());
    queue.pop_front();
    if (node.depth < depth) {
      auto [lw, rw] = triple_children(node.words);
      const auto& [x, y, z] = node.values;
      queue.push_back({lw, {x, move(x, y, z), y}, node.path + "L", node.depth + 1});
      queue.push_back({rw, {y, move(y, z, x), z}, node.path + "R", node.depth + 1});
    }
    out.push_back(std::move(node));
  }
  return out;
}

}  // namespace

IntMat CohnGenerators<BigInt>::a() { return make_mat2<BigInt>(2, 1, 1, 1); }
IntMat CohnGenerators<BigInt>::b() { return make_mat2<BigInt>(5, 2, 2, 1); }

LaurentMat CohnGenerators<LaurentPoly>::a() { return generator_product(CFRegular{{1, 1}}); }
LaurentMat CohnGenerators<LaurentPoly>::b() { return generator_product(CFRegular{{2, 2}}); }

BigInt markov_number(const Word& w) {
  BigInt tr = trace(cohn_matrix<BigInt>(w));
  if (tr % 3 != 0) throw NotDivisible("trace of " + w.compact() + " is not divisible by 3");
  return tr / 3;
}

std::array<BigInt, 3> markov_triple(const WordTriple& t) {
  return {markov_number(t.left), markov_number(t.middle), markov_number(t.right)};
}

bool is_markov_triple(const BigInt& x, const BigInt& y, const BigInt& z) {
  return x * x + y * y + z * z == 3 * x * y * z;
}

LaurentPoly entry_form(const LaurentMat& m) {
  LaurentPoly q = LaurentPoly::q();
  return q * m(0, 1) - (q - kOne) * m(1, 1);
}

LaurentPoly q_markov_value(const Word& w) {
  LaurentMat m = cohn_matrix<LaurentPoly>(w);
  LaurentPoly h = divexact(trace(m), three_q());
  if (!(h == entry_form(m))) throw Error("entry form disagrees with the trace for " + w.compact());
  return h;
}

QMarkovTriple q_markov_triple(const WordTriple& t) {
  return {q_markov_value(t.left), q_markov_value(t.middle), q_markov_value(t.right)};
}

LaurentPoly q_markov_constant() {
  LaurentPoly qm1 = LaurentPoly::q() - kOne;
  return (qm1 * qm1).shift(-3);
}

Check<LaurentPoly> verify_q_markov(const QMarkovTriple& t) {
  return compare(t.x * t.x + t.y * t.y + t.z * t.z + q_markov_constant(), three_q() * t.x * t.y * t.z);
}

Check<LaurentPoly> verify_q_markov_scaled(const QMarkovTriple& t) {
  LaurentPoly k = three_q();
  LaurentPoly x = k * t.x, y = k * t.y, z = k * t.z;
  return compare(x * x + y * y + z * z + q_markov_constant() * k * k, x * y * z);
}

QMarkovTriple vieta_move(const QMarkovTriple& t, Slot slot) {
  LaurentPoly k = three_q();
  switch (slot) {
    case Slot::x:
      return {k * t.y * t.z - t.x, t.y, t.z};
    case Slot::y:
      return {t.x, k * t.x * t.z - t.y, t.z};
    case Slot::z:
      return {t.x, t.y, k * t.x * t.y - t.z};
  }
  throw Error("unknown slot");
}

LaurentPoly near_orthogonality(const QMarkovTriple& t) {
  return t.x * t.x + t.y * t.y + t.z * t.z - three_q() * t.x * t.y * t.z;
}

Check<LaurentPoly> commutator_trace_check(const CohnTriple<LaurentPoly>& t) {
  LaurentPoly k = three_q();
  return compare(commutator_trace_plus_two(t), -(q_markov_constant() * k * k));
}

std::pair<LaurentPoly, LaurentPoly> QuadraticSurd::quadratic_residual(const LaurentMat& m) const {
  const LaurentPoly& r = m(0, 0);
  const LaurentPoly& t = m(0, 1);
  const LaurentPoly& s = m(1, 0);
  const LaurentPoly& u = m(1, 1);
  const LaurentPoly& n = numerator;
  const LaurentPoly& d = denominator;
  LaurentPoly rational = s * (n * n + radicand) + (u - r) * n * d - t * d * d;
  LaurentPoly surd = LaurentPoly(2) * s * n + (u - r) * d;
  return {rational, surd};
}

std::array<BigInt, 3> QuadraticSurd::at_one() const {
  return {numerator.eval_at_one(), radicand.eval_at_one(), denominator.eval_at_one()};
}

CFRegular period_of_word(const Word& w) {
  CFRegular cf;
  for (char c : w.letters()) {
    long v = c == 'a' ? 1 : 2;
    cf.terms.push_back(v);
    cf.terms.push_back(v);
  }
  return cf;
}

FixedPoint fixed_point(const Word& w) {
  LaurentMat m = cohn_matrix<LaurentPoly>(w);
  const LaurentPoly& r = m(0, 0);
  const LaurentPoly& s = m(1, 0);
  const LaurentPoly& u = m(1, 1);
  if (s.is_zero()) throw DegenerateMatrix("lower-left entry vanishes for " + w.compact());
  LaurentPoly tr = trace(m);
  LaurentPoly disc = tr * tr - LaurentPoly(4);
  // Tr^2 - 4 = d q^(-2k) with d an ordinary polynomial.
  long k = disc.low() < 0 ? (-disc.low() + 1) / 2 : 0;
  QuadraticSurd surd;
  surd.scale = 2 * k;
  surd.radicand = disc.shift(2 * k);
  surd.numerator = (r - u).shift(k);
  surd.denominator = (LaurentPoly(2) * s).shift(k);
  return {w, m, surd, period_of_word(w)};
}

Check<LaurentPoly> alt_deformation_1(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z,
                                     const LaurentPoly& x_prime) {
  return compare((x * x).shift(-3) + y * y + z * z, three_q() * x_prime * y * z);
}

Check<LaurentPoly> verify_alt_deformation_1(const WordTriple& t) {
  auto c = cohn_triple<LaurentPoly>(t);
  return alt_deformation_1(c.m1(0, 1), c.m12(0, 1), c.m2(0, 1), q_markov_value(t.left));
}

Check<LaurentPoly> alt_deformation_2_at(const WordTriple& t, long exponent) {
  auto h = q_markov_triple(t);
  auto c = cohn_triple<LaurentPoly>(t);
  LaurentPoly y_prime = c.m12(0, 1).inv_q().shift(exponent);
  const LaurentPoly& z_prime = c.m2(0, 1);
  return compare((h.x * h.x).shift(-3) + h.y * h.y + h.z * h.z + q_markov_constant(),
                 three_q() * h.x * y_prime * z_prime);
}

Alt2Result verify_alt_deformation_2(const WordTriple& t, ExponentWindow window) {
  if (window.size <= 0) throw NoExponentFound("empty exponent window");
  auto base = alt_deformation_2_at(t, 0);
  // The right side at exponent e is the right side at 0 times q^e.
  for (long e = window.first; e < window.first + window.size; ++e) {
    if (base.lhs == base.rhs.shift(e)) return {e, alt_deformation_2_at(t, e)};
  }
  throw NoExponentFound("no exponent in [" + std::to_string(window.first) + ", " +
                        std::to_string(window.first + window.size) + ") balances the triple (" +
                        t.left.compact() + ", " + t.middle.compact() + ", " + t.right.compact() + ")");
}

std::vector<TripleNode<BigInt>> markov_tree(int depth) {
  return vieta_tree<BigInt>(depth, {BigInt(1), BigInt(5), BigInt(2)},
                            [](const BigInt& x, const BigInt& y, const BigInt& z) { return 3 * x * y - z; });
}

std::vector<TripleNode<LaurentPoly>> q_markov_tree(int depth) {
  auto root = triple_root();
  LaurentPoly k = three_q();
  return vieta_tree<LaurentPoly>(
      depth, {q_markov_value(root.left), q_markov_value(root.middle), q_markov_value(root.right)},
      [k](const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) { return k * x * y - z; });
}

}  // namespace mdeform
