#include "lctcert/rational.hpp"

#include <algorithm>
#include <cctype>

namespace lctcert {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

BigRational rat_pow(const BigRational& base, unsigned exp) {
  BigRational r = 1;
  BigRational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

BigRational pow2(long p) {
  if (p >= 0) return BigRational(BigInt(1) << static_cast<unsigned long>(p));
  return BigRational(BigInt(1), BigInt(1) << static_cast<unsigned long>(-p));
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigRational power_over_factorial(unsigned m) {
  if (m < 1) throw std::invalid_argument("power_over_factorial: m must be >= 1");
  return BigRational(int_pow(BigInt(m), m), factorial(m));
}

Ordering compare_pow2_fractional(const BigInt& q, long p, unsigned m) {
  if (q <= 0) throw std::invalid_argument("compare_pow2_fractional: q must be positive");
  if (m == 0) throw std::invalid_argument("compare_pow2_fractional: m must be >= 1");
  // q >= 1, so q^m >= 1 > 2^p whenever p < 0.
  if (p < 0) return Ordering::Greater;
  const BigInt lhs = int_pow(q, m);
  const BigInt rhs = BigInt(1) << static_cast<unsigned long>(p);
  if (lhs < rhs) return Ordering::Less;
  if (lhs > rhs) return Ordering::Greater;
  return Ordering::Equal;
}

BigInt floor_rat(const BigRational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rat(const BigRational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

bool is_integer(const BigRational& r) { return denominator(r) == 1; }

BigRational parse_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) -> BigInt {
    if (part.empty()) throw std::invalid_argument("parse_rational: empty integer part");
    std::size_t i = 0;
    if (part[0] == '+' || part[0] == '-') i = 1;
    if (i == part.size()) throw std::invalid_argument("parse_rational: sign without digits");
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw std::invalid_argument("parse_rational: invalid character in '" + part + "'");
    return BigInt(part);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  return make_rational(num, den);
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return BigRational(num, den);  // normalizes sign and gcd
}

std::string fraction_string(const BigRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string compact_string(const BigRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return fraction_string(r);
}

}  // namespace lctcert
