#include "lctcert/kstability.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace lctcert {

BigRational poly_eval(const Poly& p, const BigRational& x) {
  BigRational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly poly_pow(const Poly& p, unsigned e) {
  Poly r{BigRational(1)};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(r, p);
  return r;
}

Poly poly_antiderivative(const Poly& p) {
  Poly r(p.size() + 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / BigRational(static_cast<long long>(i + 1));
  return r;
}

Poly poly_shift_by_x(const Poly& p) {
  Poly r(p.size() + 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
  return r;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<BigRational> breakpoints,
                                         std::vector<Poly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("PiecewisePolynomial: need >= 2 breakpoints");
  if (pieces_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("PiecewisePolynomial: piece/breakpoint count mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("PiecewisePolynomial: breakpoints must increase strictly");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const BigRational left = poly_eval(pieces_[i], breakpoints_[i + 1]);
    const BigRational right = poly_eval(pieces_[i + 1], breakpoints_[i + 1]);
    if (left != right)
      throw std::invalid_argument("PiecewisePolynomial: discontinuity at an interior breakpoint");
  }
}

BigRational PiecewisePolynomial::eval(const BigRational& x) const {
  if (x < domain_lo() || x > domain_hi())
    throw std::out_of_range("PiecewisePolynomial::eval: outside the domain");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (x <= breakpoints_[i + 1]) return poly_eval(pieces_[i], x);
  return poly_eval(pieces_.back(), x);
}

BigRational PiecewisePolynomial::integral() const { return integral(domain_lo(), domain_hi()); }

BigRational PiecewisePolynomial::integral(const BigRational& lo, const BigRational& hi) const {
  if (lo > hi) return -integral(hi, lo);
  if (lo < domain_lo() || hi > domain_hi())
    throw std::out_of_range("PiecewisePolynomial::integral: outside the domain");
  BigRational total = 0;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const BigRational a = std::max(lo, breakpoints_[i]);
    const BigRational b = std::min(hi, breakpoints_[i + 1]);
    if (a >= b) continue;
    const Poly F = poly_antiderivative(pieces_[i]);
    total += poly_eval(F, b) - poly_eval(F, a);
  }
  return total;
}

BigRational PiecewisePolynomial::first_moment() const {
  BigRational total = 0;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const Poly F = poly_antiderivative(poly_shift_by_x(pieces_[i]));
    total += poly_eval(F, breakpoints_[i + 1]) - poly_eval(F, breakpoints_[i]);
  }
  return total;
}

VolumeCurve::VolumeCurve(int dim, BigRational degree, PiecewisePolynomial volume)
    : dim_n(dim), Ln(std::move(degree)), vol(std::move(volume)) {
  if (dim_n < 1) throw std::invalid_argument("VolumeCurve: dimension must be >= 1");
  if (Ln <= 0) throw std::invalid_argument("VolumeCurve: Ln must be positive");
  if (vol.domain_lo() != 0) throw std::invalid_argument("VolumeCurve: domain must start at 0");
  if (vol.eval(BigRational(0)) != Ln)
    throw std::invalid_argument("VolumeCurve: vol(0) must equal Ln");
  // nonincreasing, checked at the breakpoints and midpoints
  const auto& bp = vol.breakpoints();
  BigRational prev = vol.eval(bp.front());
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const BigRational mid = (bp[i] + bp[i + 1]) / 2;
    const BigRational vm = vol.eval(mid);
    const BigRational ve = vol.eval(bp[i + 1]);
    if (vm > prev || ve > vm)
      throw std::invalid_argument("VolumeCurve: volume must be nonincreasing");
    if (ve < 0) throw std::invalid_argument("VolumeCurve: volume must be nonnegative");
    prev = ve;
  }
}

BigRational pseudo_effective_threshold(const VolumeCurve& curve) {
  const auto& bp = curve.vol.breakpoints();
  const auto& pieces = curve.vol.pieces();
  if (curve.vol.eval(bp.back()) > 0)
    throw NeverZeroError("pseudo_effective_threshold: volume positive at the right endpoint; "
                         "extend the domain");
  // first breakpoint from which the curve is identically zero
  std::size_t first_zero = bp.size() - 1;
  for (std::size_t i = pieces.size(); i-- > 0;) {
    const bool zero_piece =
        std::all_of(pieces[i].begin(), pieces[i].end(), [](const BigRational& c) { return c == 0; });
    if (zero_piece) first_zero = i;
    else break;
  }
  if (curve.vol.eval(bp[first_zero]) != 0)
    throw std::logic_error("pseudo_effective_threshold: zero tail does not meet the curve");
  return bp[first_zero];
}

BigRational beta(const BigRational& A, const VolumeCurve& curve) {
  if (A <= 0) throw std::invalid_argument("beta: log discrepancy must be positive");
  const BigRational tau = pseudo_effective_threshold(curve);
  return A * curve.Ln - curve.vol.integral(BigRational(0), tau);
}

RestrictedVolumeProfile::RestrictedVolumeProfile(int dim, BigRational eta_in, BigRational tau_in,
                                                 PiecewisePolynomial V_in)
    : dim_n(dim), eta(std::move(eta_in)), tau(std::move(tau_in)), V(std::move(V_in)) {
  if (dim_n < 1) throw std::invalid_argument("RestrictedVolumeProfile: dimension must be >= 1");
  if (eta < 0 || eta > tau) throw std::invalid_argument("RestrictedVolumeProfile: need 0 <= eta <= tau");
  if (V.domain_lo() != 0 || V.domain_hi() != tau)
    throw std::invalid_argument("RestrictedVolumeProfile: V must live on [0, tau]");
  const auto& bp = V.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (V.eval(bp[i]) < 0 || V.eval((bp[i] + bp[i + 1]) / 2) < 0)
      throw std::invalid_argument("RestrictedVolumeProfile: V must be nonnegative");
  }
  if (V.eval(bp.back()) < 0)
    throw std::invalid_argument("RestrictedVolumeProfile: V must be nonnegative");
}

BigRational barycenter(const RestrictedVolumeProfile& profile) {
  const BigRational mass = profile.V.integral();
  if (mass == 0) throw ZeroMassError("barycenter: profile has zero mass");
  return profile.V.first_moment() / mass;
}

RestrictedVolumeProfile extremal_profile(int n, const BigRational& eta, const BigRational& tau,
                                         const BigRational& V_eta) {
  if (n < 1) throw std::invalid_argument("extremal_profile: n must be >= 1");
  if (eta <= 0 || eta > tau) throw BadRangeError("extremal_profile: need 0 < eta <= tau");
  if (V_eta <= 0) throw std::invalid_argument("extremal_profile: V_eta must be positive");
  const unsigned e = static_cast<unsigned>(n - 1);
  // (x/eta)^(n-1) * V_eta
  Poly rising = poly_pow(Poly{BigRational(0), 1 / eta}, e);
  for (auto& c : rising) c *= V_eta;
  if (eta == tau) return RestrictedVolumeProfile(n, eta, tau, PiecewisePolynomial({0, tau}, {rising}));
  // ((tau-x)/(tau-eta))^(n-1) * V_eta
  Poly falling = poly_pow(Poly{tau / (tau - eta), BigRational(-1) / (tau - eta)}, e);
  for (auto& c : falling) c *= V_eta;
  return RestrictedVolumeProfile(n, eta, tau,
                                 PiecewisePolynomial({0, eta, tau}, {rising, falling}));
}

BarycenterBound check_barycenter_bound(const RestrictedVolumeProfile& profile) {
  BarycenterBound out;
  out.b = barycenter(profile);
  const BigRational np1(profile.dim_n + 1);
  out.bound = profile.tau / np1 + BigRational(profile.dim_n - 1) * profile.eta / np1;
  out.holds = out.b <= out.bound;
  out.equality = out.b == out.bound;
  return out;
}

VolumeCurve volume_curve_from_profile(const RestrictedVolumeProfile& profile) {
  const auto& bp = profile.V.breakpoints();
  const auto& pieces = profile.V.pieces();
  const BigRational n(profile.dim_n);
  // vol(x) = n * integral of V over [x, tau], piece by piece from the right.
  std::vector<Poly> vol_pieces(pieces.size());
  BigRational tail = 0;  // n * integral over [b_{i+1}, tau]
  for (std::size_t i = pieces.size(); i-- > 0;) {
    const Poly F = poly_antiderivative(pieces[i]);
    // vol_i(x) = tail + n*(F(b_{i+1}) - F(x))
    Poly piece = F;
    for (auto& c : piece) c *= -n;
    piece[0] += tail + n * poly_eval(F, bp[i + 1]);
    vol_pieces[i] = std::move(piece);
    tail += n * (poly_eval(F, bp[i + 1]) - poly_eval(F, bp[i]));
  }
  const BigRational Ln = tail;  // n * integral of V over [0, tau]
  if (Ln <= 0) throw std::invalid_argument("volume_curve_from_profile: zero profile");
  VolumeCurve curve(profile.dim_n, Ln, PiecewisePolynomial(bp, std::move(vol_pieces)));
  // integration by parts: integral of vol = n * first moment of V, exactly
  if (curve.vol.integral() != n * profile.V.first_moment())
    throw std::logic_error("volume_curve_from_profile: integration-by-parts identity failed");
  return curve;
}

bool logconcave_check(const PiecewisePolynomial& f, int samples) {
  if (samples < 1) throw std::invalid_argument("logconcave_check: samples must be >= 1");
  const BigRational lo = f.domain_lo();
  const BigRational hi = f.domain_hi();
  // grid fine enough to give `samples` distinct pairs
  int grid = 3;
  while ((grid + 1) * grid / 2 < samples) ++grid;
  std::vector<BigRational> xs;
  for (int k = 0; k <= grid; ++k)
    xs.push_back(lo + (hi - lo) * BigRational(k, grid));
  int done = 0;
  for (std::size_t i = 0; i < xs.size() && done < samples; ++i) {
    for (std::size_t j = i + 1; j < xs.size() && done < samples; ++j) {
      const BigRational mid = (xs[i] + xs[j]) / 2;
      const BigRational m = f.eval(mid);
      if (m * m < f.eval(xs[i]) * f.eval(xs[j])) return false;
      ++done;
    }
  }
  return true;
}

namespace {

PiecewisePolynomial pieces_from_json(const nlohmann::json& j) {
  std::vector<BigRational> breaks;
  std::vector<Poly> pieces;
  for (const auto& pj : j.at("pieces")) {
    const BigRational from = parse_rational(pj.at("from").get<std::string>());
    const BigRational to = parse_rational(pj.at("to").get<std::string>());
    if (breaks.empty()) breaks.push_back(from);
    else if (breaks.back() != from)
      throw std::invalid_argument("piecewise JSON: pieces must be contiguous");
    breaks.push_back(to);
    Poly p;
    for (const auto& cj : pj.at("coeffs")) p.push_back(parse_rational(cj.get<std::string>()));
    if (p.empty()) p.push_back(BigRational(0));
    pieces.push_back(std::move(p));
  }
  return PiecewisePolynomial(std::move(breaks), std::move(pieces));
}

nlohmann::json pieces_to_json(const PiecewisePolynomial& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    nlohmann::json pj;
    pj["from"] = fraction_string(f.breakpoints()[i]);
    pj["to"] = fraction_string(f.breakpoints()[i + 1]);
    pj["coeffs"] = nlohmann::json::array();
    for (const auto& c : f.pieces()[i]) pj["coeffs"].push_back(fraction_string(c));
    arr.push_back(std::move(pj));
  }
  return arr;
}

}  // namespace

nlohmann::json profile_to_json(const RestrictedVolumeProfile& profile) {
  nlohmann::json j;
  j["n"] = profile.dim_n;
  j["eta"] = fraction_string(profile.eta);
  j["tau"] = fraction_string(profile.tau);
  j["pieces"] = pieces_to_json(profile.V);
  return j;
}

RestrictedVolumeProfile profile_from_json(const nlohmann::json& j) {
  return RestrictedVolumeProfile(j.at("n").get<int>(),
                                 parse_rational(j.at("eta").get<std::string>()),
                                 parse_rational(j.at("tau").get<std::string>()),
                                 pieces_from_json(j));
}

VolumeCurve curve_from_json(const nlohmann::json& j) {
  PiecewisePolynomial vol = pieces_from_json(j);
  const int n = j.at("n").get<int>();
  BigRational Ln = vol.eval(vol.domain_lo());
  return VolumeCurve(n, std::move(Ln), std::move(vol));
}

nlohmann::json curve_to_json(const VolumeCurve& curve) {
  nlohmann::json j;
  j["n"] = curve.dim_n;
  j["Ln"] = fraction_string(curve.Ln);
  j["pieces"] = pieces_to_json(curve.vol);
  return j;
}

}  // namespace lctcert
