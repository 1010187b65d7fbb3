#include "lctcert/surd.hpp"

namespace lctcert {

namespace {

// c = square * free with free square-free, by trial division. Radicands in
// this toolkit are small surface numbers (6, 9, 24, ...).
void squarefree_split(const BigInt& c, BigInt& square_root, BigInt& free_part) {
  square_root = 1;
  free_part = 1;
  BigInt rest = c;
  for (BigInt p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (unsigned i = 0; i + 1 < mult; i += 2) square_root *= p;
    if (mult % 2 == 1) free_part *= p;
  }
  free_part *= rest;
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigRational a, BigRational b, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
  if (c_ == 0 || b_ == 0) {
    b_ = 0;
    c_ = 0;
    return;
  }
  BigInt sq, fr;
  squarefree_split(c_, sq, fr);
  b_ *= BigRational(sq);
  c_ = fr;
  if (c_ == 1) {  // perfect square collapsed
    a_ += b_;
    b_ = 0;
    c_ = 0;
  }
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return compact_string(a_);
  std::string out;
  if (a_ != 0) out += compact_string(a_) + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) out += "-";
  BigRational abs_b = b_ < 0 ? BigRational(-b_) : b_;
  if (abs_b != 1) out += compact_string(abs_b) + "*";
  out += "sqrt(" + c_.str() + ")";
  return out;
}

Ordering compare_surd(const QuadraticSurd& s, const BigRational& r) {
  // s vs r  <=>  b*sqrt(c) vs r - a. Isolate the radical, then square with
  // sign bookkeeping; every step exact.
  const BigRational d = r - s.rational_part();
  if (s.is_rational()) {
    if (d > 0) return Ordering::Less;
    if (d < 0) return Ordering::Greater;
    return Ordering::Equal;
  }
  const int sb = sign(s.coefficient());  // sign of b*sqrt(c), c > 1 here
  const int sd = sign(d);
  if (sb > 0 && sd <= 0) return Ordering::Greater;
  if (sb < 0 && sd >= 0) return Ordering::Less;
  const BigRational lhs_sq = s.coefficient() * s.coefficient() * BigRational(s.radicand());
  const BigRational rhs_sq = d * d;
  if (sb > 0) {  // both sides positive: compare squares directly
    if (lhs_sq < rhs_sq) return Ordering::Less;
    if (lhs_sq > rhs_sq) return Ordering::Greater;
    return Ordering::Equal;
  }
  // both sides negative: order reverses under squaring
  if (lhs_sq < rhs_sq) return Ordering::Greater;
  if (lhs_sq > rhs_sq) return Ordering::Less;
  return Ordering::Equal;
}

}  // namespace lctcert
