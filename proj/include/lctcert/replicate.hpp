#pragma once

#include "lctcert/rational.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace lctcert {

enum class CheckStatus { Pass, Fail, NotReproduced };

std::string check_status_name(CheckStatus s);

struct ReplicationCheck {
  std::string id;
  std::string description;
  std::string paper_location;  // which reference claim the check replays
  std::string computed;
  std::string expected;
  CheckStatus status = CheckStatus::Fail;
};

// Recomputes every reference value the toolkit certifies and grades each one
// PASS / FAIL / NOT_REPRODUCED. Individual failures never abort the suite,
// with one exception: an inconclusive transcendental enclosure propagates
// (the caller must raise `precision`). Deterministic: output sorted by id.
std::vector<ReplicationCheck> replicate_all(unsigned precision = 12);

// {"version", "checks": [...], "summary": {"pass","fail","not_reproduced"}};
// key order fixed so reports are byte-stable across runs.
nlohmann::ordered_json replication_report(const std::vector<ReplicationCheck>& checks);

}  // namespace lctcert
