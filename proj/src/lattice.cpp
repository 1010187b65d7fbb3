#include "lctcert/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace lctcert {

SimplexSpec::SimplexSpec(std::vector<BigRational> covector, bool strict_count)
    : a(std::move(covector)), strict(strict_count) {
  if (a.empty()) throw std::invalid_argument("SimplexSpec: empty covector");
  for (const auto& ai : a)
    if (ai <= 0) throw UnboundedRegionError("SimplexSpec: covector entries must be positive");
}

namespace {

// #{ x in Z_{>=0} | c*x < r } (strict) or <= r (closed), c > 0.
BigInt axis_count(const BigRational& c, const BigRational& r, bool strict) {
  if (strict) {
    if (r <= 0) return 0;
    const BigRational q = r / c;
    return is_integer(q) ? numerator(q) : floor_rat(q) + 1;
  }
  if (r < 0) return 0;
  return floor_rat(r / c) + 1;
}

BigInt count_rec(const std::vector<BigRational>& a, std::size_t idx, const BigRational& remaining,
                 bool strict) {
  if (idx + 1 == a.size()) return axis_count(a[idx], remaining, strict);
  BigInt total = 0;
  BigRational left = remaining;
  // x = 0, 1, ... while the budget still admits points deeper in the recursion
  for (;;) {
    if (strict ? (left <= 0) : (left < 0)) break;
    total += count_rec(a, idx + 1, left, strict);
    left -= a[idx];
  }
  return total;
}

}  // namespace

BigInt count_simplex(const SimplexSpec& spec) {
  for (const auto& ai : spec.a)
    if (ai <= 0) throw UnboundedRegionError("count_simplex: covector entries must be positive");
  // Largest coefficient outermost: smallest branching factor.
  std::vector<BigRational> sorted = spec.a;
  std::sort(sorted.begin(), sorted.end(), [](const BigRational& l, const BigRational& r) { return l > r; });
  return count_rec(sorted, 0, BigRational(1), spec.strict);
}

BigInt count_simplex_with_mask(const std::vector<BigRational>& a,
                               const std::vector<std::vector<long long>>& included) {
  BigInt total = count_simplex(SimplexSpec(a, /*strict=*/true));
  for (const auto& p : included) {
    if (p.size() != a.size())
      throw std::invalid_argument("count_simplex_with_mask: point dimension mismatch");
    BigRational dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (p[i] < 0) throw std::invalid_argument("count_simplex_with_mask: negative coordinate");
      dot += a[i] * BigRational(p[i]);
    }
    if (dot != 1)
      throw std::invalid_argument("count_simplex_with_mask: included point not on the hyperplane");
    ++total;
  }
  return total;
}

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                        const LatticePoint& d) {
  const long long d1 = cross(c, d, a);
  const long long d2 = cross(c, d, b);
  const long long d3 = cross(a, b, c);
  const long long d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

long long twice_signed_area(const std::vector<LatticePoint>& v) {
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t k = vertices_.size();
  if (k < 3) throw NotSimpleError("LatticePolygon: need at least 3 vertices");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (vertices_[i] == vertices_[j]) throw NotSimpleError("LatticePolygon: repeated vertex");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& prev = vertices_[(i + k - 1) % k];
    const auto& cur = vertices_[i];
    const auto& next = vertices_[(i + 1) % k];
    const long long cr = cross(prev, cur, next);
    const long long dot = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
    if (cr == 0 && dot < 0) throw NotSimpleError("LatticePolygon: backtracking edge");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      // skip adjacent edges (they share exactly one endpoint, checked above)
      if (j == i + 1 || (i == 0 && j == k - 1)) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % k], vertices_[j],
                             vertices_[(j + 1) % k]))
        throw NotSimpleError("LatticePolygon: self-intersection");
    }
  }
  if (twice_signed_area(vertices_) == 0) throw NotSimpleError("LatticePolygon: degenerate area");
  if (twice_signed_area(vertices_) < 0) std::reverse(vertices_.begin(), vertices_.end());
}

PickCertificate pick_certificate(const LatticePolygon& p) {
  const auto& v = p.vertices();
  const std::size_t k = v.size();
  PickCertificate cert;
  cert.area = BigRational(BigInt(twice_signed_area(v)), BigInt(2));

  BigInt boundary = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % k];
    boundary += std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y));
  }
  cert.boundary = boundary;

  // Pick: i + b/2 = A + 1.
  const BigRational interior_rat = cert.area + 1 - BigRational(boundary, BigInt(2));
  if (!is_integer(interior_rat) || interior_rat < 0)
    throw std::logic_error("pick_certificate: Pick identity produced a non-integer interior count");
  cert.interior = numerator(interior_rat);
  cert.total = cert.interior + cert.boundary;

  // Brute-force cross-check over the bounding box; exact integer geometry.
  long long xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  BigInt brute_boundary = 0, brute_interior = 0;
  for (long long x = xmin; x <= xmax; ++x) {
    for (long long y = ymin; y <= ymax; ++y) {
      const LatticePoint pt{x, y};
      bool on_edge = false;
      for (std::size_t i = 0; i < k && !on_edge; ++i)
        on_edge = on_segment(v[i], v[(i + 1) % k], pt);
      if (on_edge) {
        ++brute_boundary;
        continue;
      }
      // crossing number with the half-open edge rule [ymin, ymax)
      bool inside = false;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % k];
        if ((a.y <= y && y < b.y) || (b.y <= y && y < a.y)) {
          // x-coordinate of the edge at height y compared to x, exactly:
          // sign of (b.x - a.x)*(y - a.y) - (x - a.x)*(b.y - a.y), adjusted
          // for edge direction
          const long long lhs = (b.x - a.x) * (y - a.y) - (x - a.x) * (b.y - a.y);
          if (b.y > a.y ? lhs > 0 : lhs < 0) inside = !inside;
        }
      }
      if (inside) ++brute_interior;
    }
  }
  if (brute_boundary != cert.boundary || brute_interior != cert.interior)
    throw std::logic_error("pick_certificate: brute-force verification mismatch");
  return cert;
}

}  // namespace lctcert
