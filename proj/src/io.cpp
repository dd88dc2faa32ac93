#include "mdeform/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "mdeform/errors.hpp"

namespace mdeform {

namespace {

// Terms are (exponent, coefficient) pairs listed from the highest power down.
std::string format_terms(const std::vector<std::pair<long, BigInt>>& terms, std::string_view var) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.str();
      continue;
    }
    if (mag != 1) out << mag.str();
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

class TermParser {
 public:
  TermParser(std::string_view text, char var) : text_(text), var_(var) {}

  std::map<long, BigInt> parse() {
    std::map<long, BigInt> terms;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      BigInt coeff = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_integer();
        has_coeff = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
        }
      }
      long exponent = 0;
      if (peek() == var_) {
        ++pos_;
        exponent = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          bool neg = false;
          if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
          }
          if (peek() == '{') ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          exponent = read_integer().convert_to<long>();
          if (neg) exponent = -exponent;
          if (peek() == '}') ++pos_;
        }
      } else if (!has_coeff) {
        fail("expected a term");
      }
      terms[exponent] += sign * coeff;
      skip_space();
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  BigInt read_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

json coeff_array(const std::vector<BigInt>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.str());
  return arr;
}

std::vector<BigInt> coeffs_from(const json& arr) {
  std::vector<BigInt> out;
  for (const auto& c : arr) {
    out.push_back(c.is_string() ? parse_bigint(c.get<std::string>()) : BigInt(c.get<long long>()));
  }
  return out;
}

}  // namespace

std::string format(const IntPoly& p, std::string_view var) {
  std::vector<std::pair<long, BigInt>> terms;
  for (long e = p.degree(); e >= 0; --e) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (c != 0) terms.emplace_back(e, c);
  }
  return format_terms(terms, var);
}

std::string format(const LaurentPoly& p, std::string_view var) {
  std::vector<std::pair<long, BigInt>> terms;
  for (long e = p.high(); e >= p.low(); --e) {
    BigInt c = p.coeff(e);
    if (c != 0) terms.emplace_back(e, c);
  }
  return format_terms(terms, var);
}

std::string format(const RatFunc& f, std::string_view var) {
  if (f.is_laurent()) return format(f.num(), var);
  return "(" + format(f.num(), var) + ")/(" + format(f.den(), var) + ")";
}

std::string format(const BigInt& x) { return x.str(); }

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << format(p); }
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << format(p); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << format(f); }

IntPoly parse_intpoly(std::string_view text, char var) {
  auto terms = TermParser(text, var).parse();
  if (!terms.empty() && terms.begin()->first < 0) throw ParseError("negative exponent in a polynomial");
  std::vector<BigInt> coeffs(terms.empty() ? 0 : static_cast<std::size_t>(terms.rbegin()->first + 1), BigInt(0));
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e)] = c;
  return IntPoly(std::move(coeffs));
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  auto terms = TermParser(text, var).parse();
  LaurentPoly out;
  for (const auto& [e, c] : terms) out += LaurentPoly::monomial(e, c);
  return out;
}

json to_json(const BigInt& x) { return x.str(); }

json to_json(const BigRational& x) { return to_string(x); }

json to_json(const IntPoly& p) { return json{{"coeffs", coeff_array(p.coeffs())}}; }

json to_json(const LaurentPoly& p) {
  return json{{"offset", p.offset()}, {"coeffs", coeff_array(p.coeffs())}};
}

json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

IntPoly intpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("IntPoly JSON needs a 'coeffs' array");
  return IntPoly(coeffs_from(j.at("coeffs")));
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw ParseError("LaurentPoly JSON needs 'offset' and 'coeffs'");
  return LaurentPoly(j.value("offset", 0L), coeffs_from(j.at("coeffs")));
}

RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("RatFunc JSON needs 'num' and 'den'");
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace mdeform
