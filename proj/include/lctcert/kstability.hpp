#pragma once

#include "lctcert/errors.hpp"
#include "lctcert/rational.hpp"

#include <nlohmann/json_fwd.hpp>
#include <vector>

namespace lctcert {

// Dense polynomial, coefficients from the constant term up.
using Poly = std::vector<BigRational>;

BigRational poly_eval(const Poly& p, const BigRational& x);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_pow(const Poly& p, unsigned e);
Poly poly_antiderivative(const Poly& p);
Poly poly_shift_by_x(const Poly& p);  // x * p(x)

// Piecewise polynomial with rational breakpoints, continuous across interior
// breakpoints, exactly integrable in closed form.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<BigRational> breakpoints, std::vector<Poly> pieces);

  const std::vector<BigRational>& breakpoints() const { return breakpoints_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const BigRational& domain_lo() const { return breakpoints_.front(); }
  const BigRational& domain_hi() const { return breakpoints_.back(); }

  BigRational eval(const BigRational& x) const;
  BigRational integral() const;
  BigRational integral(const BigRational& lo, const BigRational& hi) const;
  BigRational first_moment() const;  // integral of x * f(x) over the domain

 private:
  std::vector<BigRational> breakpoints_;
  std::vector<Poly> pieces_;
};

// vol(L - xF) model: exact piecewise-polynomial volume with vol(0) = Ln > 0.
struct VolumeCurve {
  int dim_n;
  BigRational Ln;
  PiecewisePolynomial vol;

  VolumeCurve(int dim_n, BigRational Ln, PiecewisePolynomial vol);
};

// Last breakpoint where the volume first reaches (and stays) zero.
// Throws NeverZeroError if the curve is still positive at the right end.
BigRational pseudo_effective_threshold(const VolumeCurve& curve);

// beta = A * Ln - integral of vol over [0, tau], exactly.
BigRational beta(const BigRational& A, const VolumeCurve& curve);

// Restricted-volume profile V(x) on [0, tau] with a declared movable
// threshold eta; eta is data, not inferred.
struct RestrictedVolumeProfile {
  int dim_n;
  BigRational eta;
  BigRational tau;
  PiecewisePolynomial V;

  RestrictedVolumeProfile(int dim_n, BigRational eta, BigRational tau, PiecewisePolynomial V);
};

// b with integral (x - b) V(x) dx = 0; throws ZeroMassError when V has no
// mass.
BigRational barycenter(const RestrictedVolumeProfile& profile);

// The profile saturating the two-sided comparison: (x/eta)^(n-1) V_eta on
// [0, eta] and ((tau-x)/(tau-eta))^(n-1) V_eta on [eta, tau].
RestrictedVolumeProfile extremal_profile(int n, const BigRational& eta, const BigRational& tau,
                                         const BigRational& V_eta);

struct BarycenterBound {
  BigRational b;
  BigRational bound;  // tau/(n+1) + (n-1) eta/(n+1)
  bool holds;
  bool equality;
};

// Exact comparison b <= tau/(n+1) + (n-1)/(n+1) eta.
BarycenterBound check_barycenter_bound(const RestrictedVolumeProfile& profile);

// vol(x) = n * integral of V over [x, tau]; asserts the integration-by-parts
// identity (integral of vol equals n * first moment of V) exactly.
VolumeCurve volume_curve_from_profile(const RestrictedVolumeProfile& profile);

// Midpoint log-concavity test f((x+y)/2)^2 >= f(x) f(y) on a deterministic
// rational grid; a sampled check, not a proof.
bool logconcave_check(const PiecewisePolynomial& f, int samples);

nlohmann::json profile_to_json(const RestrictedVolumeProfile& profile);
RestrictedVolumeProfile profile_from_json(const nlohmann::json& j);
VolumeCurve curve_from_json(const nlohmann::json& j);
nlohmann::json curve_to_json(const VolumeCurve& curve);

}  // namespace lctcert
