#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctcert/kstability.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace lctcert;

namespace {

// vol(x) = (tau - x)^n on [0, tau]
VolumeCurve projective_model(int n) {
  const BigRational tau(n + 1);
  const Poly piece = poly_pow(Poly{tau, BigRational(-1)}, static_cast<unsigned>(n));
  return VolumeCurve(n, rat_pow(tau, static_cast<unsigned>(n)),
                     PiecewisePolynomial({BigRational(0), tau}, {piece}));
}

}  // namespace

TEST_CASE("piecewise polynomial construction and evaluation") {
  const PiecewisePolynomial f({BigRational(0), BigRational(1), BigRational(2)},
                              {{BigRational(0), BigRational(0), BigRational(1)},   // x^2
                               {BigRational(4), BigRational(-4), BigRational(1)}});  // (2-x)^2
  CHECK(f.eval(BigRational(1, 2)) == BigRational(1, 4));
  CHECK(f.eval(BigRational(3, 2)) == BigRational(1, 4));
  CHECK(f.eval(BigRational(1)) == 1);
  CHECK(f.integral() == BigRational(2, 3));
  CHECK(f.first_moment() == BigRational(2, 3));
  CHECK(f.integral(BigRational(1, 2), BigRational(1)) == BigRational(7, 24));

  CHECK_THROWS_AS(PiecewisePolynomial({BigRational(0)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewisePolynomial({BigRational(0), BigRational(0)}, {{BigRational(1)}}),
                  std::invalid_argument);
  // discontinuity rejected
  CHECK_THROWS_AS(PiecewisePolynomial({BigRational(0), BigRational(1), BigRational(2)},
                                      {{BigRational(0)}, {BigRational(5)}}),
                  std::invalid_argument);
}

TEST_CASE("pseudo-effective threshold") {
  const VolumeCurve p1(1, BigRational(2),
                       PiecewisePolynomial({BigRational(0), BigRational(2)},
                                           {{BigRational(2), BigRational(-1)}}));
  CHECK(pseudo_effective_threshold(p1) == 2);

  // appending a constant-zero tail keeps tau
  const VolumeCurve tailed(1, BigRational(2),
                           PiecewisePolynomial({BigRational(0), BigRational(2), BigRational(5)},
                                               {{BigRational(2), BigRational(-1)}, {BigRational(0)}}));
  CHECK(pseudo_effective_threshold(tailed) == 2);

  for (int n = 1; n <= 5; ++n) CHECK(pseudo_effective_threshold(projective_model(n)) == n + 1);

  const VolumeCurve positive(1, BigRational(2),
                             PiecewisePolynomial({BigRational(0), BigRational(1)},
                                                 {{BigRational(2), BigRational(-1)}}));
  CHECK_THROWS_AS(pseudo_effective_threshold(positive), NeverZeroError);
}

TEST_CASE("beta vanishes on the projective models and is affine in A") {
  const VolumeCurve p1(1, BigRational(2),
                       PiecewisePolynomial({BigRational(0), BigRational(2)},
                                           {{BigRational(2), BigRational(-1)}}));
  CHECK(beta(BigRational(1), p1) == 0);
  CHECK(beta(BigRational(2), p1) == 2);
  for (int n = 1; n <= 5; ++n) CHECK(beta(BigRational(1), projective_model(n)) == 0);
  // affine with slope Ln
  const VolumeCurve p3 = projective_model(3);
  const BigRational b1 = beta(BigRational(3, 2), p3);
  const BigRational b2 = beta(BigRational(5, 2), p3);
  CHECK(b2 - b1 == p3.Ln);
}

TEST_CASE("volume curve invariants") {
  CHECK_THROWS_AS(VolumeCurve(1, BigRational(3),
                              PiecewisePolynomial({BigRational(0), BigRational(2)},
                                                  {{BigRational(2), BigRational(-1)}})),
                  std::invalid_argument);  // vol(0) != Ln
  CHECK_THROWS_AS(VolumeCurve(1, BigRational(1),
                              PiecewisePolynomial({BigRational(0), BigRational(2)},
                                                  {{BigRational(1), BigRational(1)}})),
                  std::invalid_argument);  // increasing
}

TEST_CASE("barycenter reference values") {
  // constant profile: tau/2
  const RestrictedVolumeProfile flat(2, BigRational(2), BigRational(2),
                                     PiecewisePolynomial({BigRational(0), BigRational(2)},
                                                         {{BigRational(1)}}));
  CHECK(barycenter(flat) == 1);

  // (tau - x)^(n-1) with eta = 0: tau/(n+1)
  for (int n = 2; n <= 5; ++n) {
    const BigRational tau(3);
    const Poly piece = poly_pow(Poly{tau, BigRational(-1)}, static_cast<unsigned>(n - 1));
    const RestrictedVolumeProfile fuj(n, BigRational(0), tau,
                                      PiecewisePolynomial({BigRational(0), tau}, {piece}));
    CHECK(barycenter(fuj) == tau / (n + 1));
  }

  const RestrictedVolumeProfile ext = extremal_profile(3, BigRational(1), BigRational(2), BigRational(1));
  CHECK(barycenter(ext) == 1);

  const RestrictedVolumeProfile zero(2, BigRational(1), BigRational(1),
                                     PiecewisePolynomial({BigRational(0), BigRational(1)},
                                                         {{BigRational(0)}}));
  CHECK_THROWS_AS(barycenter(zero), ZeroMassError);
}

TEST_CASE("extremal profile construction") {
  const RestrictedVolumeProfile p = extremal_profile(3, BigRational(1), BigRational(2), BigRational(1));
  REQUIRE(p.V.pieces().size() == 2);
  CHECK(p.V.pieces()[0] == Poly{BigRational(0), BigRational(0), BigRational(1)});
  CHECK(p.V.pieces()[1] == Poly{BigRational(4), BigRational(-4), BigRational(1)});

  const RestrictedVolumeProfile lin = extremal_profile(2, BigRational(1), BigRational(3), BigRational(2));
  CHECK(lin.V.pieces()[0] == Poly{BigRational(0), BigRational(2)});
  CHECK(lin.V.pieces()[1] == Poly{BigRational(3), BigRational(-1)});

  const RestrictedVolumeProfile flat = extremal_profile(1, BigRational(1), BigRational(4), BigRational(5));
  CHECK(flat.V.eval(BigRational(0)) == 5);
  CHECK(flat.V.eval(BigRational(4)) == 5);

  CHECK_THROWS_AS(extremal_profile(3, BigRational(3), BigRational(2), BigRational(1)), BadRangeError);
  CHECK_THROWS_AS(extremal_profile(3, BigRational(0), BigRational(2), BigRational(1)), BadRangeError);
  // eta = tau collapses to the rising piece alone
  const RestrictedVolumeProfile kiss = extremal_profile(2, BigRational(2), BigRational(2), BigRational(3));
  CHECK(kiss.V.eval(BigRational(2)) == 3);
}

TEST_CASE("barycenter bound reference cases") {
  const auto ext = check_barycenter_bound(extremal_profile(3, BigRational(1), BigRational(2), BigRational(1)));
  CHECK(ext.b == 1);
  CHECK(ext.bound == 1);
  CHECK(ext.holds);
  CHECK(ext.equality);

  // eta = 0 boundary: bound tau/(n+1), met exactly by (tau - x)^(n-1)
  const BigRational tau(2);
  const Poly piece = poly_pow(Poly{tau, BigRational(-1)}, 2u);
  const auto fuj = check_barycenter_bound(RestrictedVolumeProfile(
      3, BigRational(0), tau, PiecewisePolynomial({BigRational(0), tau}, {piece})));
  CHECK(fuj.b == tau / 4);
  CHECK(fuj.bound == tau / 4);
  CHECK(fuj.equality);

  // constant profile with eta = tau = 2, n = 2: b = 1 < 4/3
  const auto flat = check_barycenter_bound(RestrictedVolumeProfile(
      2, BigRational(2), BigRational(2),
      PiecewisePolynomial({BigRational(0), BigRational(2)}, {{BigRational(1)}})));
  CHECK(flat.b == 1);
  CHECK(flat.bound == BigRational(4, 3));
  CHECK(flat.holds);
  CHECK_FALSE(flat.equality);
}

TEST_CASE("equality holds on the whole extremal grid") {
  for (int n = 2; n <= 6; ++n) {
    for (const BigRational& tau : {BigRational(1, 2), BigRational(2), BigRational(5)}) {
      for (const BigRational& ratio : {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4)}) {
        const auto res = check_barycenter_bound(extremal_profile(n, tau * ratio, tau, BigRational(1)));
        CHECK(res.equality);
      }
    }
  }
}

TEST_CASE("volume curve from a profile") {
  // V = 1 on [0,2], n = 1: vol = 2 - x
  const RestrictedVolumeProfile unit(1, BigRational(1), BigRational(2),
                                     PiecewisePolynomial({BigRational(0), BigRational(2)},
                                                         {{BigRational(1)}}));
  const VolumeCurve c1 = volume_curve_from_profile(unit);
  CHECK(c1.Ln == 2);
  CHECK(c1.vol.eval(BigRational(1, 2)) == BigRational(3, 2));
  CHECK(c1.vol.eval(BigRational(2)) == 0);

  // V = (tau - x)^(n-1): vol = (tau - x)^n and Ln = tau^n
  for (int n = 2; n <= 4; ++n) {
    const BigRational tau(3);
    const Poly piece = poly_pow(Poly{tau, BigRational(-1)}, static_cast<unsigned>(n - 1));
    const VolumeCurve c = volume_curve_from_profile(RestrictedVolumeProfile(
        n, BigRational(0), tau, PiecewisePolynomial({BigRational(0), tau}, {piece})));
    CHECK(c.Ln == rat_pow(tau, static_cast<unsigned>(n)));
    CHECK(c.vol.eval(BigRational(1)) == rat_pow(tau - 1, static_cast<unsigned>(n)));
  }

  // zero profile rejected by the curve invariants
  const RestrictedVolumeProfile zero(2, BigRational(1), BigRational(1),
                                     PiecewisePolynomial({BigRational(0), BigRational(1)},
                                                         {{BigRational(0)}}));
  CHECK_THROWS_AS(volume_curve_from_profile(zero), std::invalid_argument);
}

TEST_CASE("barycenter agrees with the volume-curve average") {
  for (int n = 2; n <= 5; ++n) {
    const auto profile = extremal_profile(n, BigRational(1), BigRational(3), BigRational(2));
    const VolumeCurve curve = volume_curve_from_profile(profile);
    CHECK(barycenter(profile) == curve.vol.integral() / curve.Ln);
  }
}

TEST_CASE("log-concavity sampling") {
  const Poly falling = poly_pow(Poly{BigRational(2), BigRational(-1)}, 3u);
  CHECK(logconcave_check(PiecewisePolynomial({BigRational(0), BigRational(2)}, {falling}), 40));
  CHECK(logconcave_check(extremal_profile(3, BigRational(1), BigRational(2), BigRational(1)).V, 40));
  // upward kink fails at the straddling midpoint
  const PiecewisePolynomial kink({BigRational(0), BigRational(1, 2), BigRational(1)},
                                 {{BigRational(1), BigRational(-1)}, {BigRational(0), BigRational(1)}});
  CHECK_FALSE(logconcave_check(kink, 40));
}

TEST_CASE("500 random concave-root profiles satisfy the bound") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<long long> small(1, 8);
  int built = 0;
  while (built < 500) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    const BigRational eta(small(rng), small(rng));
    const BigRational tau = eta + BigRational(small(rng), small(rng));
    // concave piecewise-linear g >= 0 on [0, eta] with decreasing slopes
    const int segments = 1 + static_cast<int>(rng() % 3);
    std::vector<BigRational> breaks{BigRational(0)};
    for (int i = 1; i < segments; ++i) breaks.push_back(eta * BigRational(i, segments));
    breaks.push_back(eta);
    std::vector<BigRational> slopes;
    for (int i = 0; i < segments; ++i) slopes.emplace_back(small(rng) - small(rng), small(rng));
    std::sort(slopes.rbegin(), slopes.rend());
    const BigRational g0(small(rng), small(rng));
    // linear pieces of g
    std::vector<Poly> g_pieces;
    BigRational value = g0;
    for (int i = 0; i < segments; ++i) {
      g_pieces.push_back(Poly{value - slopes[static_cast<std::size_t>(i)] * breaks[static_cast<std::size_t>(i)],
                              slopes[static_cast<std::size_t>(i)]});
      value = value + slopes[static_cast<std::size_t>(i)] *
                          (breaks[static_cast<std::size_t>(i) + 1] - breaks[static_cast<std::size_t>(i)]);
    }
    if (value <= 0) continue;  // need V(eta) > 0; concavity then keeps g >= 0 on [0, eta]
    const BigRational v_eta = rat_pow(value, static_cast<unsigned>(n - 1));
    // V = g^(n-1) on [0, eta], extended by the extremal falling factor
    std::vector<Poly> v_pieces;
    for (const auto& gp : g_pieces) v_pieces.push_back(poly_pow(gp, static_cast<unsigned>(n - 1)));
    Poly falling = poly_pow(Poly{tau / (tau - eta), BigRational(-1) / (tau - eta)},
                            static_cast<unsigned>(n - 1));
    for (auto& c : falling) c *= v_eta;
    breaks.push_back(tau);
    v_pieces.push_back(std::move(falling));
    const RestrictedVolumeProfile profile(n, eta, tau,
                                          PiecewisePolynomial(std::move(breaks), std::move(v_pieces)));
    const auto res = check_barycenter_bound(profile);
    CHECK(res.holds);
    // integration-by-parts identity on every constructed pair
    const VolumeCurve curve = volume_curve_from_profile(profile);
    CHECK(curve.vol.integral() == BigRational(n) * profile.V.first_moment());
    ++built;
  }
}

TEST_CASE("profile JSON round-trip") {
  const RestrictedVolumeProfile p = extremal_profile(3, BigRational(1), BigRational(2), BigRational(1));
  const nlohmann::json j = profile_to_json(p);
  const RestrictedVolumeProfile back = profile_from_json(j);
  CHECK(back.dim_n == p.dim_n);
  CHECK(back.eta == p.eta);
  CHECK(back.tau == p.tau);
  CHECK(back.V.breakpoints() == p.V.breakpoints());
  CHECK(back.V.pieces() == p.V.pieces());

  const VolumeCurve c = volume_curve_from_profile(p);
  const VolumeCurve cback = curve_from_json(curve_to_json(c));
  CHECK(cback.Ln == c.Ln);
  CHECK(beta(BigRational(1), cback) == beta(BigRational(1), c));
}
