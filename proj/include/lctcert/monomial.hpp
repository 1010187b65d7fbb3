#pragma once

#include "lctcert/errors.hpp"
#include "lctcert/rational.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace lctcert {

using ExponentVector = std::vector<unsigned>;

// Monomial ideal given by exponent vectors of a generating set. Construction
// normalizes to the minimal generating set: duplicates and componentwise
// dominated generators are dropped, generators are kept lex-sorted.
class MonomialIdeal {
 public:
  MonomialIdeal(int dimension, std::vector<ExponentVector> generators);

  int dimension() const { return dimension_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  bool is_unit() const;  // contains the monomial 1

  // Minimal generating set of the enlarged ideal.
  MonomialIdeal with_generator(const ExponentVector& g) const;

 private:
  int dimension_;
  std::vector<ExponentVector> generators_;
};

// Power of the maximal ideal: m^k in the given dimension.
MonomialIdeal maximal_ideal_power(int dimension, unsigned k);

// Supporting data of the Newton polytope P at the diagonal point (mu,...,mu):
// a . x = 1 supports P, a . (mu,...,mu) = 1 and a . g >= 1 - slack for every
// generator g (slack = 0 on the exact route).
struct SupportingNormal {
  BigRational mu;
  std::vector<BigRational> a;
  BigRational slack;
  bool degenerate = false;  // some a_i == 0, so Q_a is unbounded
};

// mu = min{ t > 0 | (t,...,t) in Newton polytope }, by exact rational LP over
// convex weights of the generators. Always feasible for nonempty generators.
BigRational diagonal_entry_time(const MonomialIdeal& ideal);

// 1 / diagonal_entry_time. Throws std::domain_error for the unit ideal.
BigRational lct_monomial(const MonomialIdeal& ideal);

// Supporting normal from the LP dual; throws DegenerateNormalError when the
// optimal hyperplane lies on a coordinate face (some a_i = 0).
SupportingNormal supporting_normal(const MonomialIdeal& ideal);

// Fallback for the degenerate case: a strictly positive normal supporting P
// within the given slack: a . g >= 1 - slack for all generators while keeping
// a . (mu,...,mu) = 1 exactly. Requires 0 < slack < 1.
SupportingNormal perturbed_supporting_normal(const MonomialIdeal& ideal, const BigRational& slack);

// Number of standard monomials (lattice points outside the staircase);
// nullopt when the ideal is not zero-dimensional (infinite colength).
std::optional<BigInt> colength(const MonomialIdeal& ideal);

// Text format: one generator per line, space-separated nonnegative integers,
// lines beginning with '#' ignored.
MonomialIdeal parse_monomial_ideal(std::istream& in);

}  // namespace lctcert
