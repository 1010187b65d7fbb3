#pragma once

#include "lctcert/rational.hpp"

namespace lctcert {

// Certified rational enclosure of a transcendental constant. Any decision
// made with an interval must be conclusive on the whole interval or reported
// as inconclusive; callers raise precision on Inconclusive.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
};

enum class Certified { True, False, Inconclusive };

// Enclosure of e^power (power = 1 or 2) of width < 10^-digits, from the
// Taylor series of e with the factorial remainder bound 2/(N+1)!. digits <= 50.
RationalInterval e_enclosure(int power, unsigned digits);

// lhs >= x, conclusively over the whole interval.
Certified certified_ge(const BigRational& lhs, const RationalInterval& x);

// x >= rhs, conclusively over the whole interval.
Certified certified_ge(const RationalInterval& x, const BigRational& rhs);

struct InconclusivePrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lctcert
