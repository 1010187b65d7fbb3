#pragma once

#include "lctcert/errors.hpp"
#include "lctcert/rational.hpp"

#include <vector>

namespace lctcert {

// Simplex Q_a = { x in R^n_{>=0} | a.x < 1 } (strict) or a.x <= 1 (closed).
// All a_i must be positive for the count to be finite.
struct SimplexSpec {
  std::vector<BigRational> a;
  bool strict = true;

  SimplexSpec(std::vector<BigRational> covector, bool strict_count);
};

// Exact number of lattice points of the simplex, by recursive enumeration
// with exact rational bounds; outermost coordinate is the one with the
// largest a_i. Throws UnboundedRegionError when some a_i <= 0.
BigInt count_simplex(const SimplexSpec& spec);

// Lattice points with a.x < 1 plus the listed points with a.x = 1.
BigInt count_simplex_with_mask(const std::vector<BigRational>& a,
                               const std::vector<std::vector<long long>>& included);

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  bool operator==(const LatticePoint&) const = default;
};

// Simple lattice polygon, normalized to positive (counterclockwise)
// orientation at construction. Throws NotSimpleError on self-intersection,
// repeated vertices or backtracking edges.
class LatticePolygon {
 public:
  explicit LatticePolygon(std::vector<LatticePoint> vertices);
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

 private:
  std::vector<LatticePoint> vertices_;
};

struct PickCertificate {
  BigRational area;
  BigInt boundary;
  BigInt interior;
  BigInt total;
};

// Shoelace area, gcd boundary count, interior from the Pick identity
// i + b/2 = A + 1; the interior and boundary counts are re-derived by brute
// force over the bounding box and any mismatch throws (fails loudly).
PickCertificate pick_certificate(const LatticePolygon& p);

}  // namespace lctcert
