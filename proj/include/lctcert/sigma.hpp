#pragma once

#include "lctcert/lattice.hpp"

#include <nlohmann/json_fwd.hpp>
#include <vector>

namespace lctcert {

// Certified lower bounds for sigma_{n,lambda} (strict: (lambda,...,lambda)
// inside the open simplex) and sigma-bar_{n,lambda} (closed).
enum class SigmaBoundMethod { Pick2D, Cube, Volume, Block };

struct SigmaBound {
  BigRational bound;
  bool bound_strict;      // true: sigma > bound; false: sigma >= bound
  bool for_strict_sigma;  // which quantity the bound certifies
  SigmaBoundMethod method;
};

// Throws MethodInapplicableError when (n, lambda, strict) is outside the
// method's domain.
SigmaBound sigma_lower_bound(int n, const BigRational& lambda, bool strict, SigmaBoundMethod method);

// Best certified lower bound over all applicable methods; nullopt-like
// behaviour is an error (at least one method must apply).
SigmaBound best_sigma_lower_bound(int n, const BigRational& lambda, bool strict);

enum class Exactness { Exact, LowerBound, UpperBound };

// A witness covector with an inclusion mask standing in for an infinitesimal
// perturbation: value = #(strict interior) + #(included hyperplane points).
// The mask is valid iff a perturbed covector realizes it; see
// witness_mask_feasible.
struct SigmaResult {
  int n = 0;
  BigRational lambda;
  bool strict = true;
  BigInt value;
  std::vector<BigRational> a;
  std::vector<std::vector<long long>> included;
  std::vector<std::vector<long long>> excluded;
  Exactness exactness = Exactness::UpperBound;
  bool matched_lower_bound = false;
};

// Exact sigma_{2,lambda} / sigma-bar_{2,lambda} for integer lambda by
// exhaustive enumeration of candidate hyperplanes through pairs of lattice
// points inside a certified box (any witness leaving the box already exceeds
// a known achievable value). lambda <= 12 to keep the search desk-scale.
SigmaResult sigma_exact_2d(long long lambda, bool strict);

// Budgeted heuristic witness search for n >= 2: weight-grid and
// lattice-tuple hyperplanes around permutation-symmetric seeds, plus a seeded
// random refinement. The returned value is a true upper bound realized by
// the explicit (re-verified) witness.
SigmaResult sigma_upper_search(int n, const BigRational& lambda, bool strict, long long budget = 2000,
                               unsigned long long seed = 0);

// Recount the witness: strict interior + included mask points. Throws if the
// mask points do not lie on the witness hyperplane.
BigInt recount_witness(const SigmaResult& result);

// Feasibility of the inclusion mask as a perturbation: there must be a
// direction moving every included point (and the lambda-point, for the strict
// flavor) strictly inside while no excluded point crosses in. Exact LP.
bool witness_mask_feasible(const SigmaResult& result);

// recount + mask feasibility + lambda-point side conditions.
bool verify_witness(const SigmaResult& result);

nlohmann::json sigma_to_json(const SigmaResult& result);
SigmaResult sigma_from_json(const nlohmann::json& j);

}  // namespace lctcert
