#pragma once

#include "lctcert/enclosure.hpp"
#include "lctcert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lctcert {

enum class CertMethod { Volume, Cube, Pick2D, Block, Best };
enum class WhichCheck { LctCpi, Superrigid, Conditional };

std::string cert_method_name(CertMethod m);
std::string which_check_name(WhichCheck w);

// Section count C(n+r, r-1) against the chosen sigma-bar_{n-r+1,1}
// certificate: VOLUME passes on <= (its internal bound is strict), CUBE
// needs strictly below 2^(n-r+1) - 1. Requires n > r >= 1.
bool check_lct_cpi(long long n, long long r, CertMethod cert);

// Section count C(n+r+1, 2r) strictly below the sigma-bar_{n-2r+1,1}
// certificate. Requires n > 2r - 1 >= 1.
bool check_superrigidity_dim(long long n, long long r, CertMethod cert);

// Index-m conditional check: C(n+m+r, mr+m+r-1)^m <= 2^(n-m), the integral
// form of "below 2^(n/m - 1)". Non-strict suffices: the block certificate is
// 2^floor(n/m), strictly above 2^(n/m-1).
bool check_conditional(long long n, long long r, long long m);

// The non-strict integral verdict together with the strict one; they differ
// only when C(...)^m equals 2^(n-m) exactly.
struct ConditionalVerdicts {
  bool nonstrict_pass;
  bool strict_pass;
};
ConditionalVerdicts check_conditional_verdicts(long long n, long long r, long long m);

struct ThresholdRow {
  long long n;
  std::string lhs;
  std::string rhs;
  bool pass;
};

struct ThresholdReport {
  WhichCheck which = WhichCheck::LctCpi;
  long long r = 1;
  long long m = 1;
  CertMethod cert = CertMethod::Volume;
  long long limit = 0;
  std::optional<long long> minimal_n;  // nullopt: none found up to limit
  std::optional<long long> paper_claim_n;
  bool claim_verified = false;
  bool monotone_tail = true;  // all n in [minimal_n, limit] pass
  std::vector<ThresholdRow> table;
};

// Smallest admissible n up to `limit`, with the full pass/fail table and a
// verified monotone tail. Every table entry is an exact integer/rational
// comparison.
ThresholdReport minimal_dimension(WhichCheck which, long long r, long long m, CertMethod cert,
                                  long long limit);

// Named shell for the conditional case (cert is always the block bound).
ThresholdReport conditional_threshold(long long r, long long m, long long limit);

struct SufficiencyEntry {
  std::string id;
  std::string detail;
  bool pass;
};

struct SufficiencyReport {
  std::vector<SufficiencyEntry> entries;
  bool all_pass = true;
  unsigned digits_used = 0;
};

// Certified-enclosure checks 2^(a-1) >= e(a+1) for a in [6, a_max] and
// 2^a >= (e^2/4)(a+3)^2 for a in [9, a_max], plus direct re-checks of the
// 6r / 10r dimension sufficiency for r in [1, r_max]. Starts at
// `start_digits` and escalates the enclosure precision up to 50 digits;
// throws InconclusivePrecisionError if that still does not decide.
SufficiencyReport verify_sufficiency_reductions(long long r_max, long long a_max,
                                                unsigned start_digits = 12);

enum class ClaimStatus { Verified, ValidButNotMinimal, NotReproducedByStatedCertificate };

struct PaperClaim {
  std::string id;
  std::string description;
  std::string claimed;
  std::string found;
  ClaimStatus status = ClaimStatus::Verified;
};

// The registry of advertised threshold values, each re-derived and graded.
std::vector<PaperClaim> evaluate_reference_claims();

}  // namespace lctcert
