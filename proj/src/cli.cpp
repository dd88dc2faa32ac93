#include "mdeform/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mdeform/bridge.hpp"
#include "mdeform/castling.hpp"
#include "mdeform/errata.hpp"
#include "mdeform/io.hpp"
#include "mdeform/markov.hpp"
#include "mdeform/qrat.hpp"
#include "mdeform/tables.hpp"

namespace mdeform::cli {

namespace {

enum class Format { json, text, dot };
enum class Specialize { generic, q1, t3 };

struct Settings {
  Format format = Format::json;
  Specialize specialize = Specialize::generic;
  int depth = 4;
  std::string budget = "10000";
  long dim = 3;
  long max_degree = 30;
  std::size_t max_len = 5;
  std::string via = "regular";
  std::string from = "fraction";
  bool skip_search = false;
};

// A verification failure; the payload becomes the witness on stderr.
struct VerificationFailure {
  json witness;
};

// A well-formed command line with an unusable value.
struct UsageError : Error {
  using Error::Error;
};

struct Output {
  json data;
  std::string text;
  std::string dot;
};

std::string str(const IntPoly& p) { return format(p); }
std::string str(const LaurentPoly& p) { return format(p); }

json triple_json(const WordTriple& t) {
  return json::array({t.left.compact(), t.middle.compact(), t.right.compact()});
}

std::string triple_text(const WordTriple& t) {
  return "(" + t.left.compact() + ", " + t.middle.compact() + ", " + t.right.compact() + ")";
}

json qrational_json(const QRational& r) { return {{"num", to_json(r.num)}, {"den", to_json(r.den)}}; }
std::string qrational_text(const QRational& r) { return "(" + str(r.num) + ") / (" + str(r.den) + ")"; }

Word word_argument(const std::string& arg) {
  if (arg.find('/') != std::string::npos || std::isdigit(static_cast<unsigned char>(arg.front()))) {
    return word_of_fraction(parse_rational(arg));
  }
  return Word::parse(arg);
}

template <typename Value>
std::string render_value(const Value& v, Specialize s);

template <>
std::string render_value(const BigInt& v, Specialize) {
  return v.str();
}
template <>
std::string render_value(const LaurentPoly& v, Specialize s) {
  return s == Specialize::generic ? str(v) : v.eval_at_one().str();
}
template <>
std::string render_value(const IntPoly& v, Specialize s) {
  return s == Specialize::generic ? str(v) : v.eval(BigInt(3)).str();
}
template <>
std::string render_value(const Word& v, Specialize) {
  return v.compact();
}

json value_json(const Word& v, Specialize) { return v.compact(); }
json value_json(const BigInt& v, Specialize) { return to_json(v); }
json value_json(const LaurentPoly& v, Specialize s) {
  return s == Specialize::generic ? to_json(v) : to_json(v.eval_at_one());
}
json value_json(const IntPoly& v, Specialize s) {
  return s == Specialize::generic ? to_json(v) : to_json(v.eval(BigInt(3)));
}

template <typename Value>
Output tree_output(const std::vector<TripleNode<Value>>& nodes, Specialize s, const std::string& name) {
  Output o;
  json arr = json::array();
  std::ostringstream text, dot;
  dot << "digraph " << name << " {\n  node [shape=box];\n";
  for (const auto& n : nodes) {
    json values = json::array();
    std::string label = "(";
    for (std::size_t i = 0; i < 3; ++i) {
      values.push_back(value_json(n.values[i], s));
      label += (i ? ", " : "") + render_value(n.values[i], s);
    }
    label += ")";
    arr.push_back({{"path", n.path}, {"depth", n.depth}, {"words", triple_json(n.words)}, {"values", values}});
    text << (n.path.empty() ? "root" : n.path) << "\t" << triple_text(n.words) << "\t" << label << "\n";
    std::string id = n.path.empty() ? "root" : n.path;
    dot << "  \"" << id << "\" [label=\"" << label << "\"];\n";
    if (!n.path.empty()) {
      std::string parent = n.path.size() == 1 ? "root" : n.path.substr(0, n.path.size() - 1);
      dot << "  \"" << parent << "\" -> \"" << id << "\" [label=\"" << n.path.back() << "\"];\n";
    }
  }
  dot << "}\n";
  o.data = {{"tree", name}, {"nodes", arr}};
  o.text = text.str();
  o.dot = dot.str();
  return o;
}

Output cmd_qrat(const std::string& arg, const Settings& s) {
  BigRational x = parse_rational(arg);
  QRational r;
  json expansion;
  if (s.via == "regular") {
    auto cf = cf_regular(x);
    r = q_rational_regular(cf);
    expansion = cf.terms;
  } else if (s.via == "negative") {
    auto cf = cf_negative(x);
    r = q_rational_negative(cf);
    expansion = cf.terms;
  } else if (s.via == "matrix") {
    auto cf = cf_negative(x);
    LaurentMat m = mq_neg(cf);
    r = QRational::from(RatFunc(m(0, 0), m(1, 0)));
    expansion = cf.terms;
  } else {
    throw UsageError("--via must be regular, negative or matrix");
  }
  Output o;
  o.data = {{"input", to_string(x)}, {"via", s.via}, {"expansion", expansion}, {"value", qrational_json(r)},
            {"at_one", to_string(r.at_one())}};
  o.text = "[" + to_string(x) + "]_q = " + qrational_text(r) + "\n";
  return o;
}

Output cmd_cf(const std::string& arg, const Settings& s) {
  BigRational x;
  if (s.from == "fraction") {
    x = parse_rational(arg);
  } else if (s.from == "regular") {
    CFRegular cf{parse_terms(arg)};
    validate(cf);
    x = evaluate(cf);
  } else if (s.from == "negative") {
    CFNegative cf{parse_terms(arg)};
    validate(cf);
    x = evaluate(cf);
  } else {
    throw UsageError("--from must be fraction, regular or negative");
  }
  auto reg = cf_regular(x);
  auto neg = cf_negative(x);
  auto tail = cf_regular_tail_even(x);
  Output o;
  o.data = {{"value", to_string(x)}, {"regular", reg.terms}, {"negative", neg.terms}, {"regular_tail_even", tail.terms}};
  o.text = to_string(x) + " = [" + format_terms(reg.terms) + "] = [[" + format_terms(neg.terms) + "]]\n";
  return o;
}

Output cmd_word(const std::string& arg, const Settings&) {
  Output o;
  if (arg.find('/') != std::string::npos || std::isdigit(static_cast<unsigned char>(arg.front()))) {
    BigRational f = parse_rational(arg);
    Word w = word_of_fraction(f);
    o.data = {{"fraction", to_string(f)}, {"word", w.compact()}, {"letters", w.letters()}};
    if (f < 1) {
      auto ft = farey_triple(f);
      o.data["farey"] = json::array({to_string(ft.left), to_string(ft.middle), to_string(ft.right)});
      o.data["triple"] = triple_json(ft.words);
      o.data["path"] = ft.path;
    }
    o.text = to_string(f) + " -> " + w.compact() + "\n";
    return o;
  }
  Word w = Word::parse(arg);
  auto ft = locate_word(w);
  o.data = {{"word", w.compact()}, {"letters", w.letters()}, {"christoffel", ft.has_value()}};
  if (ft) {
    o.data["fraction"] = to_string(ft->middle);
    o.data["triple"] = triple_json(ft->words);
    o.data["path"] = ft->path;
    o.text = w.compact() + " -> " + to_string(ft->middle) + "\n";
  } else {
    o.text = w.compact() + " is not the middle word of a tree triple\n";
  }
  return o;
}

Output cmd_markov(const std::string& arg, const Settings&) {
  Word w = word_argument(arg);
  Output o;
  BigInt m = markov_number(w);
  LaurentPoly h = q_markov_value(w);
  o.data = {{"word", w.compact()}, {"markov", to_json(m)}, {"h", to_json(h)}, {"h_text", str(h)},
            {"matrix", to_json(cohn_matrix<BigInt>(w))}, {"q_matrix", to_json(cohn_matrix<LaurentPoly>(w))}};
  o.text = w.compact() + ": markov " + m.str() + "\nh = " + str(h) + "\n";
  try {
    IntPoly f = t_markov_value(w);
    o.data["f"] = to_json(f);
    o.data["f_text"] = str(f);
    o.text += "f = " + str(f) + "\n";
  } catch (const OutOfRange&) {
  }
  return o;
}

Output cmd_fixed_point(const std::string& arg, const Settings&) {
  Word w = word_argument(arg);
  auto fp = fixed_point(w);
  auto [n, d, s] = fp.surd.at_one();
  Output o;
  o.data = {{"word", w.compact()},
            {"matrix", to_json(fp.matrix)},
            {"numerator", to_json(fp.surd.numerator)},
            {"radicand", to_json(fp.surd.radicand)},
            {"denominator", to_json(fp.surd.denominator)},
            {"scale", fp.surd.scale},
            {"period", fp.period.terms},
            {"at_one", {{"numerator", to_json(n)}, {"radicand", to_json(d)}, {"denominator", to_json(s)}}}};
  o.text = "theta(" + w.compact() + ") = (" + str(fp.surd.numerator) + " + sqrt(" + str(fp.surd.radicand) + ")) / (" +
           str(fp.surd.denominator) + ")\nperiod [" + format_terms(fp.period.terms) + "]\n";
  return o;
}

Output cmd_bridge(const std::string& arg, const Settings&) {
  Word w = word_argument(arg);
  auto c = bridge_check(w);
  IntPoly f = t_markov_value(w);
  Output o;
  o.data = {{"word", w.compact()}, {"f", to_json(f)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"ok", c.ok}};
  if (!c.ok) throw VerificationFailure{o.data};
  o.text = "f_" + w.compact() + "((1 + q + q^2)/q) = " + format(c.lhs) + " = q h_" + w.compact() + "\n";
  return o;
}

Output cmd_pv(const std::string& arg, const Settings&) {
  BigRational f = parse_rational(arg);
  auto r = pv_of_fraction(f);
  auto sorted = r.label.sorted();
  Output o;
  o.data = {{"fraction", to_string(f)},
            {"word", r.word.compact()},
            {"label", json::array({to_json(r.label.m1), to_json(r.label.m2), to_json(r.label.m3)})},
            {"sorted", json::array({to_json(sorted.m1), to_json(sorted.m2), to_json(sorted.m3)})},
            {"farey", json::array({to_string(r.left), to_string(r.middle), r.right == 0 ? "1/0" : to_string(r.right)})},
            {"pv", r.label.render()}};
  if (r.words) o.data["triple"] = triple_json(*r.words);
  o.text = r.label.render() + "\n";
  return o;
}

Output cmd_tree(const std::string& kind, const Settings& s) {
  if (kind == "words") return tree_output(enumerate_word_tree(s.depth), s.specialize, "words");
  if (kind == "markov") return tree_output(markov_tree(s.depth), s.specialize, "markov");
  if (kind == "qmarkov") {
    if (s.specialize == Specialize::t3) throw UsageError("the q tree specializes at q=1");
    return tree_output(q_markov_tree(s.depth), s.specialize, "qmarkov");
  }
  if (kind == "tmarkov") {
    if (s.specialize == Specialize::q1) throw UsageError("the t tree specializes at t=3");
    return tree_output(t_markov_tree(s.depth), s.specialize, "tmarkov");
  }
  // castling
  if (s.dim != 3) throw UsageError("the integer castling scan needs --dim 3");
  BigInt budget = parse_bigint(s.budget);
  auto labels = markov_subtree_scan(budget);
  std::set<PVLabel> present(labels.begin(), labels.end());
  Output o;
  json arr = json::array();
  std::ostringstream text, dot;
  dot << "graph castling {\n  node [shape=box];\n";
  auto key = [](const PVLabel& l) { return "(" + l.m1.str() + ", " + l.m2.str() + ", " + l.m3.str() + ")"; };
  for (const auto& l : labels) {
    arr.push_back(json::array({to_json(l.m1), to_json(l.m2), to_json(l.m3)}));
    text << key(l) << "\n";
    dot << "  \"" << key(l) << "\";\n";
  }
  for (const auto& l : labels) {
    CastlingTuple<BigInt> c{BigInt(3), {l.m1, l.m2, l.m3}};
    std::set<PVLabel> drawn;
    for (std::size_t i = 0; i < 3; ++i) {
      auto n = canonical(ct_flat(c, i));
      PVLabel m{n.entries[0], n.entries[1], n.entries[2]};
      if (l < m && present.count(m) && drawn.insert(m).second) {
        dot << "  \"" << key(l) << "\" -- \"" << key(m) << "\";\n";
      }
    }
  }
  dot << "}\n";
  o.data = {{"tree", "castling"}, {"dim", s.dim}, {"budget", to_json(budget)}, {"start", json::array({1, 1, 2})},
            {"triples", arr}};
  o.text = text.str();
  o.dot = dot.str();
  return o;
}

Output cmd_search(const Settings& s) {
  auto report = figure4_search(tables::search_targets(), s.max_degree, s.max_len);
  Output o;
  json outcomes = json::array();
  std::ostringstream text;
  text << report.states << " tuples, entry degree <= " << report.max_degree << ", at most " << report.max_len
       << " entries\n";
  for (const auto& t : report.outcomes) {
    json path = json::array();
    for (const auto& step : t.path) path.push_back({{"move", step.move}, {"tuple", format(step.tuple)}});
    json misses = json::array();
    for (const auto& m : t.near_misses) misses.push_back({{"reachable", str(m.reachable)}, {"exponent", m.exponent}});
    outcomes.push_back({{"name", t.name},
                        {"target", to_json(t.target)},
                        {"target_text", str(t.target)},
                        {"found", t.found},
                        {"path", path},
                        {"near_misses", misses}});
    text << t.name << ": " << (t.found ? "found in " + std::to_string(t.path.size() - 1) + " moves" : "not found")
         << "\n";
  }
  o.data = {{"states", report.states}, {"max_degree", report.max_degree}, {"max_len", report.max_len},
            {"outcomes", outcomes}};
  o.text = text.str();
  return o;
}

// Suites return the number of checks; a failing check throws its witness.
using Suite = std::function<std::size_t(const Settings&)>;

template <typename Value>
json check_json(const Check<Value>& c) {
  return {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"residual", to_json(c.residual)}};
}

void require(bool ok, const std::string& what, json detail) {
  if (!ok) throw VerificationFailure{{{"failed", what}, {"detail", std::move(detail)}}};
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"qmarkov",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& t : enumerate_triples(s.depth)) {
           auto c = verify_q_markov(q_markov_triple(t));
           require(c.ok, "q-Markov equation on " + triple_text(t), check_json(c));
           auto sc = verify_q_markov_scaled(q_markov_triple(t));
           require(sc.ok, "scaled q-Markov equation on " + triple_text(t), check_json(sc));
           auto no = near_orthogonality(q_markov_triple(t));
           require(no == -q_markov_constant(), "near-orthogonality on " + triple_text(t), to_json(no));
           n += 3;
         }
         return n;
       }},
      {"t-eq",
       [](const Settings& s) {
         std::size_t n = 0;
         auto classical = markov_tree(s.depth);
         auto nodes = t_markov_tree(s.depth);
         for (std::size_t i = 0; i < nodes.size(); ++i) {
           const auto& v = nodes[i].values;
           auto c = verify_t_markov({v[0], v[1], v[2]});
           require(c.ok, "t-Markov equation on " + triple_text(nodes[i].words), check_json(c));
           for (std::size_t k = 0; k < 3; ++k) {
             require(v[k].eval(BigInt(3)) == classical[i].values[k], "t = 3 specialization", to_json(v[k]));
           }
           n += 2;
         }
         return n;
       }},
      {"bridge",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& w : enumerate_words(s.depth)) {
           auto c = bridge_check(w);
           require(c.ok, "bridge identity for " + w.compact(), check_json(c));
           ++n;
         }
         auto r = equation_transport_check(s.depth);
         require(r.ok, "equation transport", r.first_failure ? check_json(r.failure) : json(r.constant_ok));
         return n + r.triples;
       }},
      {"fricke",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& t : enumerate_triples(s.depth)) {
           auto c = cohn_triple<LaurentPoly>(t);
           for (const auto& [x, y] : {std::pair{c.m1, c.m2}, std::pair{c.m1, c.m12}, std::pair{c.m12, c.m2}}) {
             auto f = fricke_check(x, y);
             require(f.ok, "Fricke identity on " + triple_text(t), check_json(f));
             ++n;
           }
         }
         return n;
       }},
      {"commutator",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& t : enumerate_triples(s.depth)) {
           auto c = commutator_trace_check(cohn_triple<LaurentPoly>(t));
           require(c.ok, "commutator trace on " + triple_text(t), check_json(c));
           ++n;
         }
         return n;
       }},
      {"divisibility",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& w : enumerate_words(s.depth)) {
           LaurentMat m = cohn_matrix<LaurentPoly>(w);
           require(divides(q_int(3), trace(m)), "trace of " + w.compact() + " divisible by [3]_q", to_json(trace(m)));
           LaurentPoly h = divexact(trace(m), q_int(3));
           require(h == entry_form(m), "entry form for " + w.compact(), to_json(entry_form(m)));
           require(markov_number(w) == h.eval_at_one(), "h(1) for " + w.compact(), to_json(h));
           n += 3;
         }
         return n;
       }},
      {"alt1",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& t : enumerate_triples(s.depth)) {
           auto c = verify_alt_deformation_1(t);
           require(c.ok, "first alternative deformation on " + triple_text(t), check_json(c));
           ++n;
         }
         return n;
       }},
      {"alt2",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& t : enumerate_triples(s.depth)) {
           try {
             verify_alt_deformation_2(t);
           } catch (const NoExponentFound& e) {
             require(false, "second alternative deformation on " + triple_text(t), e.what());
           }
           ++n;
         }
         return n;
       }},
      {"chebyshev",
       [](const Settings&) {
         std::size_t n = 0;
         for (long k = 1; k <= 30; ++k, ++n) {
           auto f = s_poly_forms(k);
           require(f.agree(), "three forms of S_" + std::to_string(k),
                   {{"recurrence", to_json(f.recurrence)},
                    {"chebyshev", to_json(f.chebyshev)},
                    {"determinant", to_json(f.determinant)}});
         }
         for (long k = 1; k <= 12; ++k, ++n) {
           Word w("a" + std::string(static_cast<std::size_t>(k), 'b'));
           require(f_ab_power(k) == t_markov_value(w), "f_" + w.compact() + " in Chebyshev form",
                   to_json(f_ab_power(k)));
         }
         auto pq = pq_recurrence_check(20);
         require(pq.ok(), "p/q recurrences", {{"first_failure", pq.first_failure}});
         return n + 21;
       }},
      {"polycf",
       [](const Settings&) {
         std::size_t n = 0;
         for (const auto& o : errata::evaluate_displays()) {
           json detail = {{"numerator", o.display.numerator},
                          {"denominator", o.display.denominator},
                          {"value_num", str(o.num)},
                          {"value_den", str(o.den)}};
           if (o.actual) detail["actual"] = {o.actual->first.compact(), o.actual->second.compact()};
           require(o.matches, "continued fraction for f_" + o.display.numerator + " / f_" + o.display.denominator,
                   detail);
           ++n;
         }
         return n;
       }},
      {"fixedpoint",
       [](const Settings& s) {
         std::size_t n = 0;
         for (const auto& w : enumerate_words(s.depth)) {
           auto fp = fixed_point(w);
           auto [rational, surd] = fp.surd.quadratic_residual(fp.matrix);
           require(rational.is_zero() && surd.is_zero(), "fixed point of " + w.compact(),
                   {{"rational", to_json(rational)}, {"surd", to_json(surd)}});
           require(fp.surd.radicand.is_palindromic(), "palindromic discriminant for " + w.compact(),
                   to_json(fp.surd.radicand));
           require(fp.matrix == mq_plus(fp.period), "matrix equals the plus product for " + w.compact(),
                   to_json(fp.matrix));
           n += 3;
         }
         return n;
       }},
  };
  return table;
}

Output cmd_verify(const std::string& suite, const Settings& s) {
  std::size_t checks = 0;
  try {
    checks = suites().at(suite)(s);
  } catch (VerificationFailure& f) {
    f.witness["suite"] = suite;
    f.witness["depth"] = s.depth;
    throw;
  }
  Output o;
  o.data = {{"suite", suite}, {"depth", s.depth}, {"checks", checks}, {"ok", true}};
  o.text = suite + ": " + std::to_string(checks) + " checks passed\n";
  return o;
}

Output cmd_errata(const Settings& s) {
  errata::Options opts;
  opts.include_search = !s.skip_search;
  opts.max_degree = s.max_degree;
  opts.max_len = s.max_len;
  auto entries = errata::ledger(opts);
  Output o;
  o.data = errata::to_json(entries);
  std::ostringstream text;
  for (const auto& e : entries) {
    text << e.id << " [" << e.topic << "]\n  printed:  " << e.printed << "\n  computed: " << e.computed << "\n";
  }
  o.text = text.str();
  return o;
}

void emit(const Output& o, Format f, std::ostream& out) {
  switch (f) {
    case Format::json:
      out << o.data.dump(2) << "\n";
      break;
    case Format::text:
      out << o.text;
      break;
    case Format::dot:
      if (o.dot.empty()) throw UsageError("--format dot is only available for trees");
      out << o.dot;
      break;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov triples and their q- and t-deformations", "markov-deform"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings s;
  std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}, {"dot", Format::dot}};
  std::map<std::string, Specialize> specs{
      {"generic", Specialize::generic}, {"q=1", Specialize::q1}, {"t=3", Specialize::t3}};
  app.add_option("--format", s.format, "json, text or dot")->transform(CLI::CheckedTransformer(formats))->option_text("json|text|dot");
  app.add_option("--depth", s.depth, "tree depth")->check(CLI::Range(1, 24))->option_text("1..24");
  app.add_option("--budget", s.budget, "largest entry kept by the integer scan");
  app.add_option("--specialize", s.specialize, "generic, q=1 or t=3")->transform(CLI::CheckedTransformer(specs))->option_text("generic|q=1|t=3");

  std::string arg;
  std::function<Output()> action;

  auto* qrat = app.add_subcommand("qrat", "q-deformation of a positive rational R/S");
  qrat->add_option("value", arg)->required();
  qrat->add_option("--via", s.via, "regular, negative or matrix");
  qrat->callback([&] { action = [&] { return cmd_qrat(arg, s); }; });

  auto* cf = app.add_subcommand("cf", "continued fraction expansions");
  cf->add_option("value", arg, "R/S, or a term list with --from")->required();
  cf->add_option("--from", s.from, "fraction, regular or negative");
  cf->callback([&] { action = [&] { return cmd_cf(arg, s); }; });

  auto* word = app.add_subcommand("word", "Christoffel word of R/S, or the fraction of a word");
  word->add_option("value", arg)->required();
  word->callback([&] { action = [&] { return cmd_word(arg, s); }; });

  auto* markov = app.add_subcommand("markov", "Markov number, h_w and f_w of a word or fraction");
  markov->add_option("value", arg)->required();
  markov->callback([&] { action = [&] { return cmd_markov(arg, s); }; });

  auto* fixed = app.add_subcommand("fixed-point", "fixed point of the q-Cohn matrix of a word");
  fixed->add_option("value", arg)->required();
  fixed->callback([&] { action = [&] { return cmd_fixed_point(arg, s); }; });

  auto* bridge = app.add_subcommand("bridge", "f_w((1+q+q^2)/q) against q h_w(q)");
  bridge->add_option("value", arg)->required();
  bridge->callback([&] { action = [&] { return cmd_bridge(arg, s); }; });

  auto* pv = app.add_subcommand("pv", "prehomogeneous space of Markov type for R/S");
  pv->add_option("value", arg)->required();
  pv->callback([&] { action = [&] { return cmd_pv(arg, s); }; });

  auto* tree = app.add_subcommand("tree", "enumerate a triple tree");
  tree->require_subcommand(1);
  tree->add_option("--dim", s.dim, "dimension for the castling scan");
  for (const char* kind : {"words", "markov", "qmarkov", "tmarkov", "castling"}) {
    std::string k = kind;
    tree->add_subcommand(k, k + " tree")->callback([&, k] { action = [&, k] { return cmd_tree(k, s); }; });
  }

  auto* search = app.add_subcommand("search", "bounded castling searches");
  search->require_subcommand(1);
  auto* fig = search->add_subcommand("figure4", "reachability of the listed castling polynomials");
  fig->add_option("--max-degree", s.max_degree, "largest entry degree")->check(CLI::PositiveNumber);
  fig->add_option("--max-len", s.max_len, "largest tuple length")->check(CLI::PositiveNumber);
  fig->callback([&] { action = [&] { return cmd_search(s); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  for (const auto& [name, suite] : suites()) {
    std::string n = name;
    verify->add_subcommand(n, n + " suite")->callback([&, n] { action = [&, n] { return cmd_verify(n, s); }; });
  }

  auto* errata_cmd = app.add_subcommand("errata", "ledger of printed values that disagree with computation");
  errata_cmd->add_flag("--skip-search", s.skip_search, "leave out the bounded castling search");
  errata_cmd->add_option("--max-degree", s.max_degree, "largest entry degree for the search");
  errata_cmd->add_option("--max-len", s.max_len, "largest tuple length for the search");
  errata_cmd->callback([&] { action = [&] { return cmd_errata(s); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    emit(action(), s.format, out);
    return 0;
  } catch (const VerificationFailure& f) {
    err << f.witness.dump(2) << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"markov-deform"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mdeform::cli
