#pragma once

#include "lctcert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lctcert {

// NonKlt bounds correspond to the closed count sigma-bar and yield strict
// conclusions; NonLc to the strict count sigma and non-strict conclusions.
enum class ColengthFlavor { NonKlt, NonLc };

// Lower bound on the minimal non-klt / non-lc colength at exponent 1/lambda,
// in the sigma-subscript convention (conclusion 1/(lambda+1)).
struct ColengthBound {
  BigRational lambda;
  BigRational bound;
  bool bound_strict;  // true: colength > bound (e.g. the volume bound)
  ColengthFlavor flavor;
};

struct LctCertificate {
  BigInt h0;
  ColengthBound colength_bound;
  BigRational conclusion;  // certified lower bound on the lct
  bool conclusion_strict;  // lct > conclusion, else lct >= conclusion
  // Geometric hypotheses carried for the report; recorded, never checked.
  std::vector<std::string> assumptions;
};

// Section-count versus colength comparison: succeeds when h0 < bound (or
// h0 <= bound for a strict bound), yielding lct > 1/(lambda+1) for the
// NonKlt flavor and >= for NonLc. h0 = 0 certifies lct >= 1 outright.
// A failed comparison returns nullopt: the route is inconclusive, not
// refuted.
std::optional<LctCertificate> certify_lct(const BigInt& h0, const ColengthBound& cb);

// Pigeonhole combinator: floor(h0 / per_point_bound) bad points at most.
BigInt max_bad_points(const BigInt& h0, const BigInt& per_point_bound);

// h^0 of O(d) on projective space of dimension N: C(N+d, d).
BigInt h0_projective(unsigned N, unsigned d);

// Section count of kH on a K3 surface with H^2 = H2 (even, positive):
// k^2*H2/2 + 2 for k >= 1, and 1 for k = 0.
BigInt h0_k3(unsigned k, unsigned H2);

// The two lambda conventions meet here: the sigma-subscript lambda gives
// 1/(lambda+1), the estimate-side lambda gives lambda/(lambda+1); they agree
// under lambda -> 1/lambda.
BigRational lct_bound_from_sigma_lambda(const BigRational& lambda);
BigRational lct_bound_from_estimate_lambda(const BigRational& lambda);

}  // namespace lctcert
