#include "mdeform/contfrac.hpp"

#include <limits>

#include "mdeform/errors.hpp"

namespace mdeform {

namespace {

long to_long(const BigInt& x) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min()) {
    throw OutOfRange("partial quotient too large: " + x.str());
  }
  return x.convert_to<long>();
}

void require_positive(const BigRational& x) {
  if (x <= 0) throw NonPositive("expansion needs a positive rational, got " + to_string(x));
}

std::vector<long> euclid(const BigRational& x) {
  BigInt r = numerator_of(x);
  BigInt s = denominator_of(x);
  std::vector<long> terms;
  while (s != 0) {
    BigInt a, rem;
    boost::multiprecision::divide_qr(r, s, a, rem);
    terms.push_back(to_long(a));
    r = s;
    s = rem;
  }
  return terms;
}

// Adjust the parity of terms[from..] by splitting or merging the last term.
void make_even(std::vector<long>& terms, std::size_t from) {
  if ((terms.size() - from) % 2 == 0) return;
  if (terms.back() >= 2) {
    terms.back() -= 1;
    terms.push_back(1);
  } else if (terms.size() - from >= 2) {
    terms.pop_back();
    terms.back() += 1;
  } else {
    // A lone trailing 1 with nothing to merge into: 1 = 0 + 1/1.
    terms.back() = 0;
    terms.push_back(1);
  }
}

}  // namespace

void validate(const CFRegular& cf) {
  const auto& t = cf.terms;
  if (t.empty() || t.size() % 2 != 0) throw ParseError("regular expansion needs an even, nonzero number of terms");
  if (t[0] < 0) throw ParseError("first regular term must be nonnegative");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < 1) throw ParseError("regular terms after the first must be positive");
  }
}

void validate(const CFNegative& cf) {
  const auto& t = cf.terms;
  if (t.empty()) throw ParseError("negative expansion needs at least one term");
  if (t[0] < 1) throw ParseError("first negative term must be positive");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < 2) throw ParseError("negative terms after the first must be at least 2");
  }
}

CFRegular cf_regular(const BigRational& x) {
  require_positive(x);
  auto terms = euclid(x);
  make_even(terms, 0);
  return {terms};
}

CFRegular cf_regular_tail_even(const BigRational& x) {
  require_positive(x);
  auto terms = euclid(x);
  if (terms.size() > 1) make_even(terms, 1);
  return {terms};
}

CFNegative cf_negative(const BigRational& x) {
  require_positive(x);
  std::vector<long> terms;
  BigInt r = numerator_of(x);
  BigInt s = denominator_of(x);
  while (true) {
    BigInt a, rem;
    boost::multiprecision::divide_qr(r, s, a, rem);
    if (rem == 0) {
      terms.push_back(to_long(a));
      break;
    }
    // c = floor(r/s) + 1, then r/s <- 1/(c - r/s) = s/(c s - r).
    BigInt c = a + 1;
    terms.push_back(to_long(c));
    BigInt next = c * s - r;
    r = s;
    s = next;
  }
  return {terms};
}

CFNegative to_negative(const CFRegular& cf) {
  validate(cf);
  std::vector<long> out;
  const auto& a = cf.terms;
  for (std::size_t i = 0; i < a.size(); i += 2) {
    out.push_back(i == 0 ? a[0] + 1 : a[i] + 2);
    out.insert(out.end(), static_cast<std::size_t>(a[i + 1] - 1), 2L);
  }
  return {out};
}

CFRegular to_regular(const CFNegative& cf) {
  validate(cf);
  const auto& c = cf.terms;
  std::vector<long> out{c[0] - 1};
  std::size_t i = 1;
  while (true) {
    long twos = 0;
    while (i < c.size() && c[i] == 2) {
      ++twos;
      ++i;
    }
    out.push_back(twos + 1);
    if (i == c.size()) break;
    out.push_back(c[i] - 2);
    ++i;
  }
  return {out};
}

BigRational evaluate(const CFRegular& cf) {
  validate(cf);
  BigRational acc(cf.terms.back());
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) acc = BigRational(cf.terms[i]) + 1 / acc;
  return acc;
}

BigRational evaluate(const CFNegative& cf) {
  validate(cf);
  BigRational acc(cf.terms.back());
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) acc = BigRational(cf.terms[i]) - 1 / acc;
  return acc;
}

std::pair<IntPoly, IntPoly> polycf_eval(const PolyCF& cf) {
  if (cf.empty()) throw ParseError("empty polynomial continued fraction");
  IntPoly num = cf.back();
  IntPoly den(1);
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    if (num.is_zero()) throw ZeroDenominator("continued fraction tail vanishes at position " + std::to_string(i + 1));
    IntPoly next = cf[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  IntPoly g = gcd(num, den);
  num = divexact(num, g);
  den = divexact(den, g);
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::vector<long> parse_terms(std::string_view text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto piece = text.substr(pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(to_long(parse_bigint(piece)));
    pos = comma + 1;
  }
  return out;
}

std::string format_terms(const std::vector<long>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms[i]);
  }
  return out;
}

}  // namespace mdeform
