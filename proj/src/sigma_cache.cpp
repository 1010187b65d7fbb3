#include "lctcert/sigma_cache.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>

namespace lctcert {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

SigmaCache SigmaCache::load(const std::string& path) {
  SigmaCache cache;
  std::ifstream in(path);
  if (!in) return cache;  // missing file: empty cache
  nlohmann::json j;
  try {
    in >> j;
    for (const auto& ej : j.at("entries")) {
      Entry e;
      e.result = sigma_from_json(ej.at("result"));
      e.tool_version = ej.value("tool_version", "");
      e.timestamp = ej.value("timestamp", "");
      cache.entries_.push_back(std::move(e));
    }
  } catch (const std::exception&) {
    cache.entries_.clear();  // unreadable cache is treated as empty
  }
  return cache;
}

void SigmaCache::save(const std::string& path) const {
  nlohmann::json j;
  j["version"] = kToolVersion;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json ej;
    ej["n"] = e.result.n;
    ej["lambda"] = fraction_string(e.result.lambda);
    ej["strict"] = e.result.strict;
    ej["result"] = sigma_to_json(e.result);
    ej["tool_version"] = e.tool_version;
    ej["timestamp"] = e.timestamp;
    j["entries"].push_back(std::move(ej));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("SigmaCache: cannot write " + path);
  out << j.dump(2) << "\n";
}

std::optional<SigmaResult> SigmaCache::find(int n, const BigRational& lambda, bool strict) const {
  for (const auto& e : entries_) {
    if (e.result.n != n || e.result.lambda != lambda || e.result.strict != strict) continue;
    if (!verify_witness(e.result)) continue;  // corrupted entry: treat as a miss
    return e.result;
  }
  return std::nullopt;
}

void SigmaCache::put(const SigmaResult& result) {
  for (auto& e : entries_) {
    if (e.result.n == result.n && e.result.lambda == result.lambda &&
        e.result.strict == result.strict) {
      e.result = result;
      e.tool_version = kToolVersion;
      e.timestamp = utc_timestamp();
      return;
    }
  }
  entries_.push_back({result, kToolVersion, utc_timestamp()});
}

}  // namespace lctcert
