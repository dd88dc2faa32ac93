#include "mdeform/polynomial.hpp"

#include "mdeform/errors.hpp"

namespace mdeform {

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  return divexact(p, c);
}

IntPoly divexact(const IntPoly& a, const BigInt& b) {
  if (b == 0) throw NotDivisible("division by zero");
  std::vector<BigInt> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(c, b, q, r);
    if (r != 0) throw NotDivisible("coefficient not divisible by " + b.str());
    out.push_back(std::move(q));
  }
  return IntPoly(std::move(out));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NotDivisible("degree of divisor exceeds dividend");
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, bc[db], q, r);
    if (r != 0) throw NotDivisible("leading coefficient not divisible");
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quot[k] = std::move(q);
  }
  for (const auto& c : rem) {
    if (c != 0) throw NotDivisible("nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NotDivisible("pseudo-remainder by zero");
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() <= db) return a;
  const BigInt& lb = bc[db];
  for (std::size_t top = rem.size() - 1;; --top) {
    BigInt lead = rem[top];
    for (auto& c : rem) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) rem[top - db + j] -= lead * bc[j];
    if (top == db) break;
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  BigInt c = gcd(content(a), content(b));
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x) * c;
}

BigRational evaluate(const IntPoly& p, const BigRational& x) { return p.eval(x); }

}  // namespace mdeform
