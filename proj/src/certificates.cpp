#include "lctcert/certificates.hpp"

namespace lctcert {

std::optional<LctCertificate> certify_lct(const BigInt& h0, const ColengthBound& cb) {
  if (h0 < 0) throw std::invalid_argument("certify_lct: h0 must be nonnegative");
  if (cb.bound <= 0) throw std::invalid_argument("certify_lct: colength bound must be positive");
  if (cb.lambda <= 0) throw std::invalid_argument("certify_lct: lambda must be positive");

  LctCertificate cert;
  cert.h0 = h0;
  cert.colength_bound = cb;
  cert.assumptions = {
      "L - (K_X + Delta + (1-eps)D) nef and big for all small eps > 0",
      "(X, Delta + (1-eps)D) klt outside a finite set of points",
  };

  if (h0 == 0) {
    // no sections at all: any lambda works, so the threshold is at least 1
    cert.conclusion = 1;
    cert.conclusion_strict = false;
    return cert;
  }

  const BigRational h0_rat(h0);
  const bool below = cb.bound_strict ? (h0_rat <= cb.bound) : (h0_rat < cb.bound);
  if (!below) return std::nullopt;

  cert.conclusion = lct_bound_from_sigma_lambda(cb.lambda);
  cert.conclusion_strict = (cb.flavor == ColengthFlavor::NonKlt);
  return cert;
}

BigInt max_bad_points(const BigInt& h0, const BigInt& per_point_bound) {
  if (per_point_bound < 1)
    throw std::invalid_argument("max_bad_points: per-point bound must be >= 1");
  if (h0 < 0) throw std::invalid_argument("max_bad_points: h0 must be nonnegative");
  return h0 / per_point_bound;
}

BigInt h0_projective(unsigned N, unsigned d) {
  if (N < 1) throw std::invalid_argument("h0_projective: N must be >= 1");
  return binomial(N + d, d);
}

BigInt h0_k3(unsigned k, unsigned H2) {
  if (H2 == 0 || H2 % 2 != 0) throw std::invalid_argument("h0_k3: H2 must be even and positive");
  if (k == 0) return 1;
  return BigInt(k) * BigInt(k) * BigInt(H2) / 2 + 2;
}

BigRational lct_bound_from_sigma_lambda(const BigRational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lct bound: lambda must be positive");
  return 1 / (lambda + 1);
}

BigRational lct_bound_from_estimate_lambda(const BigRational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lct bound: lambda must be positive");
  return lambda / (lambda + 1);
}

}  // namespace lctcert
