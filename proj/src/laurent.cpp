#include "mdeform/laurent.hpp"

#include "mdeform/errors.hpp"

namespace mdeform {

LaurentPoly q_int(long a) {
  if (a < 0) throw OutOfRange("q-integer of a negative number");
  return LaurentPoly(0, std::vector<BigInt>(static_cast<std::size_t>(a), BigInt(1)));
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero Laurent polynomial");
  if (a.is_zero()) return {};
  // Both shifted parts have nonzero constant terms, so divisibility in the
  // Laurent ring reduces to divisibility of the shifted parts in Z[q].
  IntPoly quotient = divexact(a.shifted_part(), b.shifted_part());
  return LaurentPoly(quotient).shift(a.low() - b.low());
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  try {
    divexact(a, b);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace mdeform
