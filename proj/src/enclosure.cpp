#include "lctcert/enclosure.hpp"

namespace lctcert {

RationalInterval e_enclosure(int power, unsigned digits) {
  if (power != 1 && power != 2) throw std::invalid_argument("e_enclosure: power must be 1 or 2");
  if (digits > 50) throw std::invalid_argument("e_enclosure: digits must be <= 50");
  // Overshoot the requested width by two orders of magnitude so that squaring
  // (for e^2) and downstream comparisons stay comfortably conclusive.
  const BigRational target = BigRational(1, int_pow(BigInt(10), digits + 2));
  BigRational sum = 1;       // k = 0 term
  BigRational term = 1;      // 1/k!
  unsigned k = 0;
  BigRational remainder(2);  // 2/(k+1)! with k = 0
  auto wide = [&]() {
    if (power == 1) return remainder >= target;
    // width of [sum^2, (sum+remainder)^2] = remainder * (2*sum + remainder)
    return remainder * (2 * sum + remainder) >= target;
  };
  while (wide()) {
    ++k;
    term /= k;
    sum += term;
    remainder = 2 * term / (k + 1);  // 2/(k+1)!
  }
  if (power == 1) return {sum, sum + remainder};
  const BigRational hi = sum + remainder;
  return {sum * sum, hi * hi};
}

Certified certified_ge(const BigRational& lhs, const RationalInterval& x) {
  if (lhs >= x.hi) return Certified::True;
  if (lhs < x.lo) return Certified::False;
  return Certified::Inconclusive;
}

Certified certified_ge(const RationalInterval& x, const BigRational& rhs) {
  if (x.lo >= rhs) return Certified::True;
  if (x.hi < rhs) return Certified::False;
  return Certified::Inconclusive;
}

}  // namespace lctcert
