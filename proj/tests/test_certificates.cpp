#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctcert/certificates.hpp"
#include "lctcert/sigma.hpp"

#include <random>

using namespace lctcert;

TEST_CASE("certify_lct reference cases") {
  SUBCASE("closed surface bound at m = 11 gives a strict conclusion") {
    const ColengthBound cb{BigRational(11), BigRational(253), false, ColengthFlavor::NonKlt};
    const auto cert = certify_lct(BigInt(245), cb);
    REQUIRE(cert.has_value());
    CHECK(cert->conclusion == BigRational(1, 12));
    CHECK(cert->conclusion_strict);
  }
  SUBCASE("no sections certify a threshold of one") {
    const ColengthBound cb{BigRational(3), BigRational(10), false, ColengthFlavor::NonLc};
    const auto cert = certify_lct(BigInt(0), cb);
    REQUIRE(cert.has_value());
    CHECK(cert->conclusion == 1);
    CHECK_FALSE(cert->conclusion_strict);
  }
  SUBCASE("point case: lambda = 1/n gives n/(n+1), non-strict") {
    for (int n = 2; n <= 6; ++n) {
      const ColengthBound cb{BigRational(1, n), BigRational(2), false, ColengthFlavor::NonLc};
      const auto cert = certify_lct(BigInt(1), cb);
      REQUIRE(cert.has_value());
      CHECK(cert->conclusion == BigRational(n, n + 1));
      CHECK_FALSE(cert->conclusion_strict);
    }
  }
  SUBCASE("failed comparison is inconclusive, not false") {
    const ColengthBound cb{BigRational(11), BigRational(253), false, ColengthFlavor::NonKlt};
    CHECK_FALSE(certify_lct(BigInt(253), cb).has_value());
    CHECK_FALSE(certify_lct(BigInt(300), cb).has_value());
  }
  SUBCASE("strict bounds admit equality of the section count") {
    const ColengthBound strict_bound{BigRational(1), BigRational(100), true, ColengthFlavor::NonKlt};
    CHECK(certify_lct(BigInt(100), strict_bound).has_value());
    const ColengthBound weak_bound{BigRational(1), BigRational(100), false, ColengthFlavor::NonKlt};
    CHECK_FALSE(certify_lct(BigInt(100), weak_bound).has_value());
  }
  SUBCASE("assumptions are recorded") {
    const ColengthBound cb{BigRational(1), BigRational(5), false, ColengthFlavor::NonKlt};
    const auto cert = certify_lct(BigInt(2), cb);
    REQUIRE(cert.has_value());
    CHECK(cert->assumptions.size() == 2);
  }
}

TEST_CASE("certify_lct is monotone") {
  const BigRational lambda(3);
  for (long long h0 = 0; h0 <= 30; ++h0) {
    for (long long bound = 1; bound <= 30; ++bound) {
      const ColengthBound cb{lambda, BigRational(bound), false, ColengthFlavor::NonKlt};
      const auto cert = certify_lct(BigInt(h0), cb);
      if (!cert) continue;
      // decreasing h0 keeps the certificate
      if (h0 > 0) CHECK(certify_lct(BigInt(h0 - 1), cb).has_value());
      // increasing the bound keeps the certificate
      const ColengthBound wider{lambda, BigRational(bound + 1), false, ColengthFlavor::NonKlt};
      CHECK(certify_lct(BigInt(h0), wider).has_value());
    }
  }
}

TEST_CASE("both lambda conventions agree") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> num(1, 40), den(1, 15);
  for (int i = 0; i < 200; ++i) {
    const BigRational lambda(num(rng), den(rng));
    CHECK(lct_bound_from_sigma_lambda(lambda) == lct_bound_from_estimate_lambda(1 / lambda));
  }
  CHECK(lct_bound_from_sigma_lambda(BigRational(11)) == BigRational(1, 12));
  CHECK(lct_bound_from_estimate_lambda(BigRational(3)) == BigRational(3, 4));
}

TEST_CASE("max_bad_points") {
  CHECK(max_bad_points(BigInt(110), BigInt(59)) == 1);
  CHECK(max_bad_points(BigInt(29), BigInt(13)) == 2);
  CHECK(max_bad_points(BigInt(0), BigInt(7)) == 0);
  CHECK_THROWS_AS(max_bad_points(BigInt(5), BigInt(0)), std::invalid_argument);
}

TEST_CASE("projective and K3 section counts") {
  CHECK(h0_projective(13, 1) == 14);
  CHECK(h0_projective(17, 4) == 5985);
  CHECK(h0_projective(17, 4) == binomial(21, 4));
  CHECK(h0_projective(9, 0) == 1);

  CHECK(h0_k3(9, 6) == 245);
  CHECK(h0_k3(6, 6) == 110);
  CHECK(h0_k3(3, 6) == 29);
  CHECK(h0_k3(0, 6) == 1);
  CHECK(max_bad_points(h0_k3(3, 6), BigInt(3)) == 9);
  CHECK_THROWS_AS(h0_k3(2, 5), std::invalid_argument);

  // first difference (H2/2)(2k-1), second difference H2, for the quadratic
  // range k >= 1 (k = 0 is the constant section)
  for (unsigned k = 2; k <= 12; ++k) CHECK(h0_k3(k, 6) - h0_k3(k - 1, 6) == BigInt(3) * (2 * k - 1));
  for (unsigned k = 3; k <= 12; ++k)
    CHECK(h0_k3(k, 6) - 2 * h0_k3(k - 1, 6) + h0_k3(k - 2, 6) == 6);
}

TEST_CASE("end-to-end composition reproduces the r >= 3 case") {
  const SigmaBound sb = sigma_lower_bound(2, BigRational(11), false, SigmaBoundMethod::Pick2D);
  const auto cert = certify_lct(
      h0_k3(9, 6), ColengthBound{BigRational(11), sb.bound, sb.bound_strict, ColengthFlavor::NonKlt});
  REQUIRE(cert.has_value());
  CHECK(cert->conclusion == BigRational(1, 12));
  CHECK(cert->conclusion_strict);
}
