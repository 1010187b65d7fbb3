#include "lctcert/surface.hpp"

namespace lctcert {

IntersectionForm::IntersectionForm(std::vector<std::vector<BigInt>> gram_matrix,
                                   std::vector<std::string> labels)
    : gram(std::move(gram_matrix)), basis_labels(std::move(labels)) {
  const std::size_t k = gram.size();
  if (k == 0 || k > 3) throw std::invalid_argument("IntersectionForm: size must be 1..3");
  for (const auto& row : gram)
    if (row.size() != k) throw std::invalid_argument("IntersectionForm: matrix must be square");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("IntersectionForm: matrix must be symmetric");
  if (basis_labels.empty())
    for (std::size_t i = 0; i < k; ++i) basis_labels.push_back("e" + std::to_string(i));
  if (basis_labels.size() != k)
    throw std::invalid_argument("IntersectionForm: label count mismatch");
}

BigRational pairing(const IntersectionForm& form, const DivisorClass& u, const DivisorClass& v) {
  const std::size_t k = form.gram.size();
  if (u.coefficients.size() != k || v.coefficients.size() != k)
    throw DimensionMismatchError("pairing: class length does not match the form");
  BigRational total = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      total += u.coefficients[i] * BigRational(form.gram[i][j]) * v.coefficients[j];
  return total;
}

std::optional<long long> max_mult_from_selfint(const IntersectionForm& form,
                                               const DivisorClass& base, int curve_index,
                                               const BigRational& lower) {
  const std::size_t k = form.gram.size();
  if (base.coefficients.size() != k)
    throw DimensionMismatchError("max_mult_from_selfint: class length does not match the form");
  if (curve_index < 0 || static_cast<std::size_t>(curve_index) >= k)
    throw std::invalid_argument("max_mult_from_selfint: curve index out of range");
  DivisorClass curve{std::vector<BigRational>(k, BigRational(0))};
  curve.coefficients[static_cast<std::size_t>(curve_index)] = 1;

  // q(s) = (base - s*curve)^2 = A s^2 + B s + C
  const BigRational A = pairing(form, curve, curve);
  const BigRational B = -2 * pairing(form, base, curve);
  const BigRational C = pairing(form, base, base);
  if (A >= 0)
    throw std::invalid_argument("max_mult_from_selfint: quadratic must open downward "
                                "(curve self-intersection must be negative)");
  const BigRational vertex = -B / (2 * A);

  std::optional<long long> best;
  for (long long s = 0;; ++s) {
    const BigRational sr(s);
    const BigRational q = A * sr * sr + B * sr + C;
    if (q >= lower) best = s;
    else if (sr > vertex) break;  // past the apex and below: stays below
  }
  return best;
}

GammaBound gamma_mult_bound(long long d, long long M2H) {
  if (d < 0 || M2H < 0) throw std::invalid_argument("gamma_mult_bound: inputs must be nonnegative");
  QuadraticSurd value(BigRational(BigInt(d), BigInt(3)), BigRational(BigInt(2), BigInt(3)), BigInt(M2H));
  const bool less = compare_surd(value, BigRational(4)) == Ordering::Less;
  return {std::move(value), less};
}

}  // namespace lctcert
