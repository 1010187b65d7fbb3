#pragma once

#include "lctcert/rational.hpp"

namespace lctcert {

// a + b*sqrt(c) with rational a, b and a nonnegative integer radicand c.
// Normalized on construction: square factors of c are pulled into b, and a
// perfect-square (or zero) radicand collapses the surd to a plain rational
// (b = 0, c = 0). Comparisons against rationals are exact.
class QuadraticSurd {
 public:
  QuadraticSurd(BigRational a, BigRational b, BigInt c);

  const BigRational& rational_part() const { return a_; }
  const BigRational& coefficient() const { return b_; }
  const BigInt& radicand() const { return c_; }
  bool is_rational() const { return b_ == 0; }

  std::string to_string() const;

 private:
  BigRational a_;
  BigRational b_;
  BigInt c_;  // square-free or zero
};

Ordering compare_surd(const QuadraticSurd& s, const BigRational& r);

}  // namespace lctcert
