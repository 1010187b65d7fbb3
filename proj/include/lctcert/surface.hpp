#pragma once

#include "lctcert/errors.hpp"
#include "lctcert/rational.hpp"
#include "lctcert/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lctcert {

// Small symmetric intersection form on a surface lattice (size <= 3).
struct IntersectionForm {
  std::vector<std::vector<BigInt>> gram;
  std::vector<std::string> basis_labels;

  IntersectionForm(std::vector<std::vector<BigInt>> gram_matrix,
                   std::vector<std::string> labels);
};

struct DivisorClass {
  std::vector<BigRational> coefficients;
};

// u^T G v, exactly.
BigRational pairing(const IntersectionForm& form, const DivisorClass& u, const DivisorClass& v);

// Largest nonnegative integer s with (base - s * e_curve)^2 >= lower; the
// quadratic must open downward (negative curve self-intersection). nullopt
// when already s = 0 fails.
std::optional<long long> max_mult_from_selfint(const IntersectionForm& form,
                                               const DivisorClass& base, int curve_index,
                                               const BigRational& lower);

struct GammaBound {
  QuadraticSurd value;  // d/3 + (2/3) sqrt(M2H)
  bool less_than_4;
};

GammaBound gamma_mult_bound(long long d, long long M2H);

}  // namespace lctcert
