#include "lctcert/monomial.hpp"

#include "lctcert/linprog.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

namespace lctcert {

namespace {

bool dominates(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dimension, std::vector<ExponentVector> generators)
    : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("MonomialIdeal: dimension must be >= 1");
  if (generators.empty()) throw std::invalid_argument("MonomialIdeal: empty generating set");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != dimension)
      throw std::invalid_argument("MonomialIdeal: generator dimension mismatch");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = (i != j && dominates(generators[i], generators[j]));
    if (!redundant) generators_.push_back(generators[i]);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const ExponentVector& g) {
    return std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; });
  });
}

MonomialIdeal MonomialIdeal::with_generator(const ExponentVector& g) const {
  auto gens = generators_;
  gens.push_back(g);
  return MonomialIdeal(dimension_, std::move(gens));
}

MonomialIdeal maximal_ideal_power(int dimension, unsigned k) {
  if (k == 0) return MonomialIdeal(dimension, {ExponentVector(static_cast<std::size_t>(dimension), 0)});
  // Minimal generators of m^k are all monomials of total degree k; for the
  // Newton polytope and colength only the pure powers and the simplex facet
  // matter, but we keep the honest full generating set.
  std::vector<ExponentVector> gens;
  ExponentVector cur(static_cast<std::size_t>(dimension), 0);
  // enumerate compositions of k into `dimension` parts
  std::vector<unsigned> stack;
  std::function<void(int, unsigned)> rec = [&](int pos, unsigned left) {
    if (pos == dimension - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      gens.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  return MonomialIdeal(dimension, std::move(gens));
}

namespace {

// LP for mu: variables (lambda_1..lambda_k, t), minimize t subject to
//   sum_j lambda_j g_j[i] - t <= 0   (coordinate i)
//   sum_j lambda_j = 1
// The duals of the coordinate rows give the supporting normal.
SupportingNormal solve_newton_polytope(const MonomialIdeal& ideal) {
  const int n = ideal.dimension();
  const auto& gens = ideal.generators();
  const int k = static_cast<int>(gens.size());
  std::vector<lp::Row> rows;
  for (int i = 0; i < n; ++i) {
    lp::Vec coeffs(static_cast<std::size_t>(k + 1), BigRational(0));
    for (int j = 0; j < k; ++j)
      coeffs[static_cast<std::size_t>(j)] = BigRational(gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    coeffs[static_cast<std::size_t>(k)] = -1;
    rows.push_back({std::move(coeffs), lp::Rel::Le, BigRational(0)});
  }
  lp::Vec convexity(static_cast<std::size_t>(k + 1), BigRational(1));
  convexity[static_cast<std::size_t>(k)] = 0;
  rows.push_back({std::move(convexity), lp::Rel::Eq, BigRational(1)});
  lp::Vec cost(static_cast<std::size_t>(k + 1), BigRational(0));
  cost[static_cast<std::size_t>(k)] = 1;

  const lp::Result res = lp::minimize(rows, cost);
  if (res.status != lp::Status::Optimal)
    throw std::logic_error("diagonal_entry_time: LP did not reach an optimum");

  // Primal certificate: the returned convex weights place (mu,...,mu) in the
  // Newton polytope. Checked exactly, independent of the solver internals.
  {
    BigRational weight_sum = 0;
    for (int j = 0; j < k; ++j) {
      if (res.x[static_cast<std::size_t>(j)] < 0)
        throw std::logic_error("diagonal_entry_time: negative convex weight");
      weight_sum += res.x[static_cast<std::size_t>(j)];
    }
    if (weight_sum != 1) throw std::logic_error("diagonal_entry_time: weights do not sum to 1");
    for (int i = 0; i < n; ++i) {
      BigRational coord = 0;
      for (int j = 0; j < k; ++j)
        coord += res.x[static_cast<std::size_t>(j)] *
                 BigRational(gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      if (coord > res.objective)
        throw std::logic_error("diagonal_entry_time: primal certificate failed");
    }
  }

  SupportingNormal out;
  out.mu = res.objective;
  out.slack = 0;
  if (out.mu == 0) {
    // unit ideal: the diagonal enters P at t = 0, no supporting normal exists
    out.degenerate = true;
    out.a.assign(static_cast<std::size_t>(n), BigRational(0));
    return out;
  }
  // a_i = -y_i / mu rescales the dual so that a . (mu,...,mu) = 1.
  out.a.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.a[static_cast<std::size_t>(i)] = -res.dual[static_cast<std::size_t>(i)] / out.mu;
    if (out.a[static_cast<std::size_t>(i)] < 0)
      throw std::logic_error("supporting_normal: negative dual component");
    if (out.a[static_cast<std::size_t>(i)] == 0) out.degenerate = true;
  }
  // Certify exactly: a . g >= 1 for every generator and a . (mu,...,mu) = 1.
  BigRational diag = 0;
  for (const auto& ai : out.a) diag += ai * out.mu;
  if (diag != 1) throw std::logic_error("supporting_normal: diagonal certificate failed");
  for (const auto& g : gens) {
    BigRational dot = 0;
    for (int i = 0; i < n; ++i) dot += out.a[static_cast<std::size_t>(i)] * BigRational(g[static_cast<std::size_t>(i)]);
    if (dot < 1) throw std::logic_error("supporting_normal: generator certificate failed");
  }
  return out;
}

}  // namespace

BigRational diagonal_entry_time(const MonomialIdeal& ideal) {
  return solve_newton_polytope(ideal).mu;
}

BigRational lct_monomial(const MonomialIdeal& ideal) {
  const BigRational mu = diagonal_entry_time(ideal);
  if (mu == 0) throw std::domain_error("lct_monomial: unit ideal");
  return 1 / mu;
}

SupportingNormal supporting_normal(const MonomialIdeal& ideal) {
  SupportingNormal sn = solve_newton_polytope(ideal);
  if (sn.mu == 0) throw std::domain_error("supporting_normal: unit ideal");
  if (sn.degenerate)
    throw DegenerateNormalError(
        "supporting_normal: optimal hyperplane lies on a coordinate face; "
        "use perturbed_supporting_normal");
  return sn;
}

SupportingNormal perturbed_supporting_normal(const MonomialIdeal& ideal, const BigRational& slack) {
  if (slack <= 0 || slack >= 1)
    throw std::invalid_argument("perturbed_supporting_normal: slack must be in (0,1)");
  SupportingNormal sn = solve_newton_polytope(ideal);
  if (sn.mu == 0) throw std::domain_error("perturbed_supporting_normal: unit ideal");
  if (!sn.degenerate) return sn;  // already strictly positive, slack 0
  const int n = ideal.dimension();
  BigInt zeros = 0;
  for (const auto& ai : sn.a)
    if (ai == 0) ++zeros;
  // Raise the zero coordinates by delta and renormalize the diagonal
  // condition; generators then satisfy a . g >= 1 / (1 + delta * zeros * mu),
  // and delta = slack / ((1 - slack) * zeros * mu) makes that exactly 1 - slack.
  const BigRational delta = slack / ((1 - slack) * BigRational(zeros) * sn.mu);
  const BigRational scale = 1 + delta * BigRational(zeros) * sn.mu;
  SupportingNormal out;
  out.mu = sn.mu;
  out.slack = slack;
  out.degenerate = false;
  out.a.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigRational raised = sn.a[static_cast<std::size_t>(i)];
    if (raised == 0) raised = delta;
    out.a[static_cast<std::size_t>(i)] = raised / scale;
  }
  // Re-certify the slackened support conditions exactly.
  BigRational diag = 0;
  for (const auto& ai : out.a) diag += ai * out.mu;
  if (diag != 1) throw std::logic_error("perturbed_supporting_normal: diagonal renormalization failed");
  for (const auto& g : ideal.generators()) {
    BigRational dot = 0;
    for (int i = 0; i < n; ++i) dot += out.a[static_cast<std::size_t>(i)] * BigRational(g[static_cast<std::size_t>(i)]);
    if (dot < 1 - slack) throw std::logic_error("perturbed_supporting_normal: slack certificate failed");
  }
  return out;
}

std::optional<BigInt> colength(const MonomialIdeal& ideal) {
  const int n = ideal.dimension();
  const auto& gens = ideal.generators();
  // Finite colength needs a pure power of every variable.
  std::vector<unsigned> box(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& g : gens) {
      bool pure = g[static_cast<std::size_t>(i)] > 0;
      for (int j = 0; j < n && pure; ++j)
        if (j != i && g[static_cast<std::size_t>(j)] != 0) pure = false;
      if (pure) {
        if (!found || g[static_cast<std::size_t>(i)] < box[static_cast<std::size_t>(i)])
          box[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
        found = true;
      }
    }
    if (!found) {
      if (ideal.is_unit()) break;  // unit ideal: colength 0, handled below
      return std::nullopt;
    }
  }
  if (ideal.is_unit()) return BigInt(0);
  // Standard monomials live in the box below the pure powers; count the
  // points that dominate no generator. Desk-scale sizes, plain enumeration.
  BigInt count = 0;
  ExponentVector point(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool in_ideal = false;
    for (const auto& g : gens) {
      if (dominates(point, g)) {
        in_ideal = true;
        break;
      }
    }
    if (!in_ideal) ++count;
    int pos = 0;
    while (pos < n) {
      if (++point[static_cast<std::size_t>(pos)] < box[static_cast<std::size_t>(pos)]) break;
      point[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return count;
}

MonomialIdeal parse_monomial_ideal(std::istream& in) {
  std::vector<ExponentVector> gens;
  std::string line;
  int dim = -1;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    ExponentVector g;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("monomial ideal file: negative exponent");
      g.push_back(static_cast<unsigned>(v));
    }
    if (!ls.eof()) throw std::invalid_argument("monomial ideal file: invalid token");
    if (g.empty()) continue;
    if (dim < 0) dim = static_cast<int>(g.size());
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("monomial ideal file: inconsistent dimension");
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw std::invalid_argument("monomial ideal file: no generators");
  return MonomialIdeal(dim, std::move(gens));
}

}  // namespace lctcert
