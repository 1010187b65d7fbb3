#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lctcert {

// All arithmetic in the toolkit is exact. Floating point is forbidden on any
// decision path: several certified inequalities (66045^2 vs 2^32, for one)
// differ by less than 2%.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class Ordering { Less, Equal, Greater };

inline Ordering compare(const BigRational& a, const BigRational& b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

inline int sign(const BigRational& a) { return a.sign(); }
inline int sign(const BigInt& a) { return a.sign(); }

BigInt factorial(unsigned n);
BigInt int_pow(const BigInt& base, unsigned exp);
BigRational rat_pow(const BigRational& base, unsigned exp);

// 2^p as an exact rational, p may be negative.
BigRational pow2(long p);

// Exact C(n, k); zero when k > n. Descending-product evaluation, each partial
// product is itself a binomial so the division is exact.
BigInt binomial(unsigned long n, unsigned long k);

// m^m / m! in lowest terms, m >= 1.
BigRational power_over_factorial(unsigned m);

// Exact ordering of q versus 2^(p/m), q > 0, m >= 1, decided on integer m-th
// powers. No logarithms anywhere.
Ordering compare_pow2_fractional(const BigInt& q, long p, unsigned m);

BigInt floor_rat(const BigRational& r);
BigInt ceil_rat(const BigRational& r);
bool is_integer(const BigRational& r);

// Parses "p/q" or a bare integer, with optional sign.
BigRational parse_rational(const std::string& text);

// Lossless "p/q" rendering (denominator always printed).
std::string fraction_string(const BigRational& r);

// "p" when the denominator is 1, else "p/q".
std::string compact_string(const BigRational& r);

BigRational make_rational(const BigInt& num, const BigInt& den);

}  // namespace lctcert
