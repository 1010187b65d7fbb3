#include "lctcert/sigma.hpp"

#include "lctcert/linprog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

namespace lctcert {

SigmaBound sigma_lower_bound(int n, const BigRational& lambda, bool strict, SigmaBoundMethod method) {
  if (n < 1) throw std::invalid_argument("sigma_lower_bound: n must be >= 1");
  if (lambda <= 0) throw std::invalid_argument("sigma_lower_bound: lambda must be positive");
  switch (method) {
    case SigmaBoundMethod::Pick2D: {
      if (n != 2) throw MethodInapplicableError("PICK2D needs n = 2");
      if (!is_integer(lambda) || lambda < 1)
        throw MethodInapplicableError("PICK2D needs a positive integer lambda");
      const BigInt m = numerator(lambda);
      if (strict) {
        // sigma_{2,m} >= (4m^2+3m+3)/2; integral, so round up.
        const BigRational raw(4 * m * m + 3 * m + 3, 2);
        return {BigRational(ceil_rat(raw)), false, true, method};
      }
      return {BigRational(m * (2 * m + 1)), false, false, method};
    }
    case SigmaBoundMethod::Cube: {
      if (lambda != 1) throw MethodInapplicableError("CUBE needs lambda = 1");
      // sigma-bar_{n,1} >= 2^n - 1 (every cube vertex except the diagonal one
      // lies strictly inside); bounds the strict flavor too.
      return {BigRational(int_pow(BigInt(2), static_cast<unsigned>(n)) - 1), false, strict, method};
    }
    case SigmaBoundMethod::Volume: {
      if (lambda != 1) throw MethodInapplicableError("VOLUME needs lambda = 1");
      if (n < 2) throw MethodInapplicableError("VOLUME needs n >= 2");
      // sigma-bar_{n,1} > vol(Q_a) >= n^n/n!; a strict bound.
      return {power_over_factorial(static_cast<unsigned>(n)), true, strict, method};
    }
    case SigmaBoundMethod::Block: {
      if (lambda >= 1) throw MethodInapplicableError("BLOCK needs 0 < lambda < 1");
      const BigRational nl = BigRational(n) * lambda;
      const BigInt m = floor_rat(nl);
      if (strict) {
        // the first floor(n*lambda) coordinates of a sorted covector sum
        // below 1, so a whole cube of vertices is inside: 2^floor(n*lambda)
        return {BigRational(int_pow(BigInt(2), static_cast<unsigned>(m))), false, true, method};
      }
      // closed flavor: the strict sub-sum argument needs n*lambda to be
      // non-integral; otherwise retreat one coordinate.
      const BigInt exponent = is_integer(nl) ? m - 1 : m;
      if (exponent < 0) return {BigRational(1), false, false, method};
      return {BigRational(int_pow(BigInt(2), static_cast<unsigned>(exponent))), false, false, method};
    }
  }
  throw std::logic_error("sigma_lower_bound: unknown method");
}

SigmaBound best_sigma_lower_bound(int n, const BigRational& lambda, bool strict) {
  bool have = false;
  SigmaBound best{BigRational(0), false, strict, SigmaBoundMethod::Cube};
  for (SigmaBoundMethod m : {SigmaBoundMethod::Pick2D, SigmaBoundMethod::Cube,
                             SigmaBoundMethod::Volume, SigmaBoundMethod::Block}) {
    try {
      SigmaBound b = sigma_lower_bound(n, lambda, strict, m);
      // compare certified integer floors: a strict bound B certifies >= B+1
      // only through integrality, handled by callers; rank on the raw bound.
      if (!have || b.bound > best.bound) {
        best = b;
        have = true;
      }
    } catch (const MethodInapplicableError&) {
    }
  }
  if (!have) throw MethodInapplicableError("no lower-bound method applies");
  return best;
}

namespace {

// Smallest count a certified bound forces on an integer quantity.
BigInt forced_integer_bound(const SigmaBound& b) {
  if (b.bound_strict) return floor_rat(b.bound) + 1;
  return ceil_rat(b.bound);
}

struct Candidate2D {
  long long c1 = 0, c2 = 0, d = 0;  // hyperplane c1*x + c2*y = d, covector (c1/d, c2/d)
};

// All nonnegative lattice points on c1*x + c2*y = d, sorted by ascending x.
std::vector<std::pair<long long, long long>> hyperplane_points_2d(long long c1, long long c2,
                                                                  long long d) {
  std::vector<std::pair<long long, long long>> pts;
  for (long long x = 0; c1 * x <= d; ++x) {
    const long long rest = d - c1 * x;
    if (rest % c2 == 0) pts.emplace_back(x, rest / c2);
  }
  return pts;
}

}  // namespace

SigmaResult sigma_exact_2d(long long lambda, bool strict) {
  if (lambda < 1) throw std::invalid_argument("sigma_exact_2d: lambda must be a positive integer");
  if (lambda > 12)
    throw std::invalid_argument("sigma_exact_2d: lambda > 12 exceeds the desk-scale search box; "
                                "use sigma_lower_bound / sigma_upper_search");
  const long long m = lambda;
  // Seed witness a = (1/2m, 1/2m): closed count m(2m+1); the strict flavor
  // additionally pays the shorter hyperplane run through (m,m).
  const long long seed_value = strict ? 2 * m * m + 2 * m + 1 : m * (2 * m + 1);
  // Any witness with value <= seed contains the punctured (m+1)x(m+1) grid
  // under (m,m), so its coordinates are bounded; box extends one past that.
  long long box = seed_value - (m + 1) * (m + 1) + 1 + m + 1;
  box = std::max(box, 2 * m + 1);

  struct Best {
    long long value = -1;
    Candidate2D cand;
    bool binding = false;
    bool run_low_x = false;  // included run toward smaller x
  } best;
  best.value = seed_value + 1;

  std::vector<std::pair<long long, long long>> pts;
  for (long long x = 0; x <= box; ++x)
    for (long long y = 0; y <= box; ++y) pts.emplace_back(x, y);

  auto lex_less = [](const Candidate2D& l, const Candidate2D& r) {
    // (l.c1/l.d, l.c2/l.d) < (r.c1/r.d, r.c2/r.d) lexicographically
    const long long left = l.c1 * r.d, right = r.c1 * l.d;
    if (left != right) return left < right;
    return l.c2 * r.d < r.c2 * l.d;
  };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto [px, py] = pts[i];
      const auto [qx, qy] = pts[j];
      long long d = px * qy - py * qx;
      long long c1 = qy - py;
      long long c2 = px - qx;
      if (d < 0) {
        d = -d;
        c1 = -c1;
        c2 = -c2;
      }
      if (d == 0 || c1 <= 0 || c2 <= 0) continue;
      const long long diag = m * (c1 + c2);
      if (diag > d) continue;  // (m,m) outside the closed simplex
      {
        const long long g = std::gcd(std::gcd(c1, c2), d);
        c1 /= g;
        c2 /= g;
        d /= g;
      }
      // strict interior count, rows in y
      long long count = 0;
      bool pruned = false;
      for (long long y = 0; c2 * y < d; ++y) {
        const long long rest = d - c2 * y;
        count += (rest - 1) / c1 + 1;
        if (count > best.value) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      long long value = count;
      bool binding = false;
      bool run_low_x = false;
      if (strict && m * (c1 + c2) == d) {
        binding = true;
        const auto hpts = hyperplane_points_2d(c1, c2, d);
        std::size_t idx = hpts.size();
        for (std::size_t t = 0; t < hpts.size(); ++t)
          if (hpts[t].first == m && hpts[t].second == m) idx = t;
        if (idx == hpts.size()) throw std::logic_error("sigma_exact_2d: diagonal point lost");
        const long long low = static_cast<long long>(idx) + 1;
        const long long high = static_cast<long long>(hpts.size() - idx);
        value += std::min(low, high);
        run_low_x = low <= high;
      }
      const Candidate2D cand{c1, c2, d};
      if (value < best.value ||
          (value == best.value && lex_less(cand, best.cand))) {
        best = {value, cand, binding, run_low_x};
      }
    }
  }

  SigmaResult result;
  result.n = 2;
  result.lambda = BigRational(m);
  result.strict = strict;
  result.value = BigInt(best.value);
  result.a = {BigRational(BigInt(best.cand.c1), BigInt(best.cand.d)),
              BigRational(BigInt(best.cand.c2), BigInt(best.cand.d))};
  const auto hpts = hyperplane_points_2d(best.cand.c1, best.cand.c2, best.cand.d);
  std::size_t idx = hpts.size();
  for (std::size_t t = 0; t < hpts.size(); ++t)
    if (hpts[t].first == m && hpts[t].second == m) idx = t;
  for (std::size_t t = 0; t < hpts.size(); ++t) {
    const std::vector<long long> p{hpts[t].first, hpts[t].second};
    const bool inc = strict && best.binding &&
                     (best.run_low_x ? t <= idx : t >= idx);
    if (inc) result.included.push_back(p);
    else result.excluded.push_back(p);
  }
  result.exactness = Exactness::Exact;  // enumeration exhaustive in the certified box
  const SigmaBound pick = sigma_lower_bound(2, result.lambda, strict, SigmaBoundMethod::Pick2D);
  result.matched_lower_bound = (result.value == forced_integer_bound(pick));
  if (result.value < forced_integer_bound(pick))
    throw std::logic_error("sigma_exact_2d: value fell below the certified lower bound");
  if (!verify_witness(result))
    throw std::logic_error("sigma_exact_2d: witness failed re-verification");
  return result;
}

namespace {

// Lattice points on a.x = 1, x >= 0, for a strictly positive rational
// covector (finitely many since every a_i > 0).
void hyperplane_points_rec(const std::vector<BigRational>& a, std::size_t idx,
                           const BigRational& remaining, std::vector<long long>& cur,
                           std::vector<std::vector<long long>>& out) {
  if (idx + 1 == a.size()) {
    if (remaining < 0) return;
    const BigRational q = remaining / a[idx];
    if (is_integer(q)) {
      cur.push_back(static_cast<long long>(numerator(q)));
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (long long v = 0; BigRational(v) * a[idx] <= remaining; ++v) {
    cur.push_back(v);
    hyperplane_points_rec(a, idx + 1, remaining - BigRational(v) * a[idx], cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long long>> hyperplane_points(const std::vector<BigRational>& a) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  hyperplane_points_rec(a, 0, BigRational(1), cur, out);
  return out;
}

// Solves M a = 1 by Gaussian elimination; nullopt when singular.
std::optional<std::vector<BigRational>> solve_unit_rhs(std::vector<std::vector<BigRational>> M) {
  const std::size_t n = M.size();
  std::vector<BigRational> rhs(n, BigRational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      const BigRational f = M[row][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<BigRational> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = rhs[i] / M[i][i];
  return a;
}

}  // namespace

SigmaResult sigma_upper_search(int n, const BigRational& lambda, bool strict, long long budget,
                               unsigned long long seed) {
  if (n < 2 || n > 8) throw std::invalid_argument("sigma_upper_search: n must be in [2, 8]");
  if (lambda <= 0) throw std::invalid_argument("sigma_upper_search: lambda must be positive");
  if (budget < 1) budget = 1;

  struct Best {
    BigInt value;
    std::vector<BigRational> a;
    std::vector<std::vector<long long>> included;
    std::vector<std::vector<long long>> excluded;
    bool set = false;
  } best;

  // delta directions for the inclusion mask: the mask realized by delta is
  // H cut by the open half-space delta.x < 0, always feasible by construction.
  std::vector<std::vector<long long>> deltas;
  {
    std::vector<long long> cur(static_cast<std::size_t>(n), -1);
    for (;;) {
      long long sum = 0;
      for (long long v : cur) sum += v;
      if (sum < 0) deltas.push_back(cur);  // delta.(lambda,...,lambda) = lambda*sum < 0
      int pos = 0;
      while (pos < n) {
        if (++cur[static_cast<std::size_t>(pos)] <= 1) break;
        cur[static_cast<std::size_t>(pos)] = -1;
        ++pos;
      }
      if (pos == n) break;
    }
  }

  // Evaluates one rational covector; for the strict flavor a binding diagonal
  // is handled by the delta mask with the smallest forced inclusion set.
  auto consider_covector = [&](const std::vector<BigRational>& a) {
    for (const auto& ai : a)
      if (ai <= 0) return;
    BigRational diag = 0;
    for (const auto& ai : a) diag += ai * lambda;
    if (diag > 1) return;
    // every axis row lies inside Q_a, so a cheap per-axis count already
    // dominates; skip covectors that cannot beat the incumbent
    if (best.set) {
      for (const auto& ai : a) {
        const BigRational q = 1 / ai;
        const BigInt axis = is_integer(q) ? numerator(q) : floor_rat(q) + 1;
        if (axis > best.value) return;
      }
    }
    const BigInt interior = count_simplex(SimplexSpec(a, /*strict=*/true));
    const auto hpts = hyperplane_points(a);
    BigInt value = interior;
    std::vector<std::vector<long long>> included, excluded;
    if (strict && diag == 1) {
      const std::vector<long long>* best_delta = nullptr;
      std::size_t best_inc = hpts.size() + 1;
      for (const auto& delta : deltas) {
        std::size_t inc = 0;
        for (const auto& h : hpts) {
          long long dot = 0;
          for (int i = 0; i < n; ++i) dot += delta[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)];
          if (dot < 0) ++inc;
        }
        if (inc < best_inc) {
          best_inc = inc;
          best_delta = &delta;
        }
      }
      if (best_delta == nullptr) return;
      value += BigInt(static_cast<long long>(best_inc));
      for (const auto& h : hpts) {
        long long dot = 0;
        for (int i = 0; i < n; ++i) dot += (*best_delta)[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)];
        if (dot < 0) included.push_back(h);
        else excluded.push_back(h);
      }
    } else {
      excluded = hpts;
    }
    if (!best.set || value < best.value) {
      best.set = true;
      best.value = value;
      best.a = a;
      best.included = std::move(included);
      best.excluded = std::move(excluded);
    }
  };

  auto consider_weights = [&](const std::vector<long long>& w) {
    BigRational wsum = 0;
    for (long long wi : w) wsum += BigRational(wi);
    std::vector<BigRational> binding;
    for (long long wi : w) binding.push_back(BigRational(wi) / (lambda * wsum));
    consider_covector(binding);
    if (strict) {
      // slightly non-binding scale: no mask needed
      const BigRational t_loose = BigRational(floor_rat(lambda * wsum) + 1);
      std::vector<BigRational> loose;
      for (long long wi : w) loose.push_back(BigRational(wi) / t_loose);
      consider_covector(loose);
    }
  };

  long long used = 0;
  // phase 1: weight grid around the symmetric seed
  {
    const long long W = 4;
    std::vector<long long> w(static_cast<std::size_t>(n), 1);
    for (;;) {
      long long g = 0;
      for (long long wi : w) g = std::gcd(g, wi);
      if (g == 1) {
        consider_weights(w);
        if (++used >= budget) break;
      }
      int pos = 0;
      while (pos < n) {
        if (++w[static_cast<std::size_t>(pos)] <= W) break;
        w[static_cast<std::size_t>(pos)] = 1;
        ++pos;
      }
      if (pos == n) break;
    }
  }
  // phase 2: hyperplanes through n-tuples of small lattice points
  if (used < budget) {
    const long long K = static_cast<long long>(ceil_rat(2 * lambda)) + 1;
    std::vector<std::vector<long long>> pts;
    std::vector<long long> cur(static_cast<std::size_t>(n), 0);
    for (bool more = true; more;) {
      if (std::any_of(cur.begin(), cur.end(), [](long long v) { return v > 0; })) pts.push_back(cur);
      int pos = n - 1;
      while (pos >= 0) {
        if (++cur[static_cast<std::size_t>(pos)] <= K) break;
        cur[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      more = pos >= 0;
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    std::function<bool(std::size_t, std::size_t)> tuples = [&](std::size_t depth, std::size_t from) {
      if (depth == static_cast<std::size_t>(n)) {
        std::vector<std::vector<BigRational>> M;
        for (std::size_t idx : pick) {
          std::vector<BigRational> row;
          for (long long v : pts[idx]) row.emplace_back(v);
          M.push_back(std::move(row));
        }
        if (const auto a = solve_unit_rhs(std::move(M))) consider_covector(*a);
        return ++used < budget;
      }
      for (std::size_t i = from; i < pts.size(); ++i) {
        pick[depth] = i;
        if (!tuples(depth + 1, i + 1)) return false;
      }
      return true;
    };
    tuples(0, 0);
  }
  // phase 3: seeded random integer weights
  if (used < budget) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uniform_int_distribution<long long> dist(1, 24);
    while (used < budget) {
      std::vector<long long> w(static_cast<std::size_t>(n));
      for (auto& wi : w) wi = dist(rng);
      long long g = 0;
      for (long long wi : w) g = std::gcd(g, wi);
      for (auto& wi : w) wi /= g;
      consider_weights(w);
      ++used;
    }
  }

  SigmaResult result;
  result.n = n;
  result.lambda = lambda;
  result.strict = strict;
  result.value = best.value;
  result.a = best.a;
  result.included = best.included;
  result.excluded = best.excluded;
  result.exactness = Exactness::UpperBound;
  result.matched_lower_bound = false;
  try {
    const SigmaBound lb = best_sigma_lower_bound(n, lambda, strict);
    if (result.value == forced_integer_bound(lb)) {
      result.matched_lower_bound = true;
      result.exactness = Exactness::Exact;
    }
  } catch (const MethodInapplicableError&) {
  }
  if (!verify_witness(result))
    throw std::logic_error("sigma_upper_search: witness failed re-verification");
  return result;
}

BigInt recount_witness(const SigmaResult& result) {
  return count_simplex_with_mask(result.a, result.included);
}

bool witness_mask_feasible(const SigmaResult& result) {
  const int n = result.n;
  if (static_cast<int>(result.a.size()) != n) return false;
  for (const auto& ai : result.a)
    if (ai <= 0) return false;

  BigRational diag = 0;
  for (const auto& ai : result.a) diag += ai * result.lambda;
  if (diag > 1) return false;  // the lambda-point must lie in the closure

  // Points that must move strictly inside under the perturbation.
  std::vector<std::vector<BigRational>> strict_in;
  // Points that must not cross inside.
  std::vector<std::vector<BigRational>> weak_out;
  // Directions that must not increase (closed flavor with binding diagonal).
  std::vector<std::vector<BigRational>> weak_in;

  auto to_rat = [&](const std::vector<long long>& p) {
    std::vector<BigRational> v;
    v.reserve(p.size());
    for (long long c : p) v.emplace_back(c);
    return v;
  };
  auto on_hyperplane = [&](const std::vector<long long>& p) {
    if (static_cast<int>(p.size()) != n) return false;
    BigRational dot = 0;
    for (int i = 0; i < n; ++i) {
      if (p[static_cast<std::size_t>(i)] < 0) return false;
      dot += result.a[static_cast<std::size_t>(i)] * BigRational(p[static_cast<std::size_t>(i)]);
    }
    return dot == 1;
  };
  for (const auto& p : result.included) {
    if (!on_hyperplane(p)) return false;
    strict_in.push_back(to_rat(p));
  }
  for (const auto& p : result.excluded) {
    if (!on_hyperplane(p)) return false;
    weak_out.push_back(to_rat(p));
  }
  if (diag == 1) {
    std::vector<BigRational> lpoint(static_cast<std::size_t>(n), result.lambda);
    if (result.strict) {
      // (lambda,...,lambda) must end up strictly inside; when it is a lattice
      // point it must also be counted, i.e. listed as included.
      if (is_integer(result.lambda)) {
        const long long lv = static_cast<long long>(numerator(result.lambda));
        const std::vector<long long> lint(static_cast<std::size_t>(n), lv);
        if (std::find(result.included.begin(), result.included.end(), lint) == result.included.end())
          return false;
      } else {
        strict_in.push_back(lpoint);
      }
    } else {
      weak_in.push_back(lpoint);
    }
  }

  // LP over delta = p - q and a margin: maximize the margin subject to
  //   delta.x <= -margin   (x in strict_in)
  //   delta.y >= 0         (y in weak_out)
  //   delta.z <= 0         (z in weak_in)
  // with box bounds; the mask is feasible iff the optimum margin is positive.
  const int vars = 2 * n + 1;  // p_0..p_{n-1}, q_0..q_{n-1}, margin
  std::vector<lp::Row> rows;
  auto delta_row = [&](const std::vector<BigRational>& x, const BigRational& margin_coeff) {
    lp::Vec coeffs(static_cast<std::size_t>(vars), BigRational(0));
    for (int i = 0; i < n; ++i) {
      coeffs[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
      coeffs[static_cast<std::size_t>(n + i)] = -x[static_cast<std::size_t>(i)];
    }
    coeffs[static_cast<std::size_t>(2 * n)] = margin_coeff;
    return coeffs;
  };
  for (const auto& x : strict_in) rows.push_back({delta_row(x, BigRational(1)), lp::Rel::Le, BigRational(0)});
  for (const auto& y : weak_out) rows.push_back({delta_row(y, BigRational(0)), lp::Rel::Ge, BigRational(0)});
  for (const auto& z : weak_in) rows.push_back({delta_row(z, BigRational(0)), lp::Rel::Le, BigRational(0)});
  for (int v = 0; v < vars; ++v) {
    lp::Vec bound(static_cast<std::size_t>(vars), BigRational(0));
    bound[static_cast<std::size_t>(v)] = 1;
    rows.push_back({std::move(bound), lp::Rel::Le, BigRational(1)});
  }
  lp::Vec cost(static_cast<std::size_t>(vars), BigRational(0));
  cost[static_cast<std::size_t>(2 * n)] = -1;  // maximize the margin
  const lp::Result res = lp::minimize(rows, cost);
  if (res.status != lp::Status::Optimal) return false;
  return res.objective < 0;
}

bool verify_witness(const SigmaResult& result) {
  try {
    if (recount_witness(result) != result.value) return false;
  } catch (const std::exception&) {
    return false;
  }
  return witness_mask_feasible(result);
}

namespace {

std::string exactness_string(Exactness e) {
  switch (e) {
    case Exactness::Exact: return "EXACT";
    case Exactness::LowerBound: return "LOWER_BOUND";
    case Exactness::UpperBound: return "UPPER_BOUND";
  }
  return "UPPER_BOUND";
}

Exactness exactness_from_string(const std::string& s) {
  if (s == "EXACT") return Exactness::Exact;
  if (s == "LOWER_BOUND") return Exactness::LowerBound;
  if (s == "UPPER_BOUND") return Exactness::UpperBound;
  throw std::invalid_argument("unknown exactness tag: " + s);
}

}  // namespace

nlohmann::json sigma_to_json(const SigmaResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  j["lambda"] = fraction_string(result.lambda);
  j["strict"] = result.strict;
  j["value"] = result.value.str();
  j["a"] = nlohmann::json::array();
  for (const auto& ai : result.a) j["a"].push_back(fraction_string(ai));
  j["included"] = result.included;
  j["excluded"] = result.excluded;
  j["exactness"] = exactness_string(result.exactness);
  return j;
}

SigmaResult sigma_from_json(const nlohmann::json& j) {
  SigmaResult r;
  r.n = j.at("n").get<int>();
  r.lambda = parse_rational(j.at("lambda").get<std::string>());
  r.strict = j.at("strict").get<bool>();
  r.value = BigInt(j.at("value").get<std::string>());
  for (const auto& ai : j.at("a")) r.a.push_back(parse_rational(ai.get<std::string>()));
  r.included = j.at("included").get<std::vector<std::vector<long long>>>();
  r.excluded = j.at("excluded").get<std::vector<std::vector<long long>>>();
  r.exactness = exactness_from_string(j.at("exactness").get<std::string>());
  try {
    const SigmaBound lb = best_sigma_lower_bound(r.n, r.lambda, r.strict);
    r.matched_lower_bound = (r.value == forced_integer_bound(lb));
  } catch (const MethodInapplicableError&) {
    r.matched_lower_bound = false;
  }
  return r;
}

}  // namespace lctcert
