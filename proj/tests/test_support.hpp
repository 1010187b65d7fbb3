#pragma once

// Test-side oracles, kept independent of the library paths they check.

#include "lctcert/lattice.hpp"
#include "lctcert/monomial.hpp"
#include "lctcert/rational.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace lctcert::testing {

// floor(x^(1/m)) by bracketed binary search; integer arithmetic only.
inline BigInt mth_root_floor(const BigInt& x, unsigned m) {
  if (x < 0) throw std::invalid_argument("mth_root_floor: negative input");
  if (x == 0) return 0;
  BigInt lo = 0, hi = 1;
  while (int_pow(hi, m) <= x) hi <<= 1;
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (int_pow(mid, m) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

// Rational enclosure of sqrt(c) of width 10^-digits, via the integer square
// root of c * 10^(2*digits).
struct SqrtInterval {
  BigRational lo;
  BigRational hi;
};

inline SqrtInterval sqrt_enclosure(const BigInt& c, unsigned digits) {
  const BigInt scale = int_pow(BigInt(10), digits);
  const BigInt r = mth_root_floor(c * scale * scale, 2);
  return {BigRational(r, scale), BigRational(r + 1, scale)};
}

// Rational enclosure of 2^(p/m) (p >= 0) of width 10^-digits.
inline SqrtInterval pow2_fractional_enclosure(unsigned long p, unsigned m, unsigned digits) {
  const BigInt scale = int_pow(BigInt(10), digits);
  const BigInt r = mth_root_floor((BigInt(1) << p) * int_pow(scale, m), m);
  return {BigRational(r, scale), BigRational(r + 1, scale)};
}

// Random simple lattice polygon: distinct points sorted by exact angle about
// their centroid, one point kept per direction (star-shaped, hence simple).
inline std::vector<LatticePoint> random_simple_polygon(std::mt19937_64& rng, int max_coord,
                                                       int points) {
  std::uniform_int_distribution<long long> coord(-max_coord, max_coord);
  for (;;) {
    std::vector<LatticePoint> pts;
    while (static_cast<int>(pts.size()) < points) {
      LatticePoint p{coord(rng), coord(rng)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    // centroid times n, to stay integral
    long long cx = 0, cy = 0;
    for (const auto& p : pts) {
      cx += p.x;
      cy += p.y;
    }
    const long long n = static_cast<long long>(pts.size());
    // direction of p relative to the centroid, scaled by n
    auto dir = [&](const LatticePoint& p) {
      return std::pair<long long, long long>{n * p.x - cx, n * p.y - cy};
    };
    auto half = [](const std::pair<long long, long long>& d) {
      return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1;
    };
    std::erase_if(pts, [&](const LatticePoint& p) {
      const auto d = dir(p);
      return d.first == 0 && d.second == 0;
    });
    std::sort(pts.begin(), pts.end(), [&](const LatticePoint& a, const LatticePoint& b) {
      const auto da = dir(a), db = dir(b);
      if (half(da) != half(db)) return half(da) < half(db);
      const long long cr = da.first * db.second - da.second * db.first;
      if (cr != 0) return cr > 0;
      // same ray: nearer point first
      return std::llabs(da.first) + std::llabs(da.second) <
             std::llabs(db.first) + std::llabs(db.second);
    });
    // one point per direction
    std::vector<LatticePoint> out;
    for (const auto& p : pts) {
      if (!out.empty()) {
        const auto d1 = dir(out.back()), d2 = dir(p);
        if (d1.first * d2.second - d1.second * d2.first == 0 &&
            d1.first * d2.first + d1.second * d2.second > 0)
          continue;
      }
      out.push_back(p);
    }
    if (out.size() >= 3) return out;
  }
}

// All zero-dimensional staircase ideals in the plane whose generators fit in
// [0,6]^2, as nonincreasing column-height profiles; the profile sum is an
// independent colength oracle.
struct Staircase2D {
  MonomialIdeal ideal;
  BigInt colength;
};

inline std::vector<Staircase2D> all_staircases_2d() {
  std::vector<Staircase2D> out;
  std::vector<unsigned> heights(6, 0);
  auto emit = [&]() {
    long long total = 0;
    std::vector<ExponentVector> gens;
    for (unsigned x = 0; x < 6; ++x) {
      total += heights[x];
      gens.push_back({x, heights[x]});
    }
    gens.push_back({6, 0});
    if (total == 0) return;  // unit ideal, nothing to certify
    out.push_back({MonomialIdeal(2, std::move(gens)), BigInt(total)});
  };
  // nonincreasing heights in {0..6}
  std::function<void(unsigned, unsigned)> rec = [&](unsigned x, unsigned cap) {
    if (x == 6) {
      emit();
      return;
    }
    for (unsigned h = 0; h <= cap; ++h) {
      heights[x] = h;
      rec(x + 1, h);
    }
  };
  // heights must be enumerated nonincreasing: h_0 from 0..6 then cap follows
  rec(0, 6);
  return out;
}

}  // namespace lctcert::testing
