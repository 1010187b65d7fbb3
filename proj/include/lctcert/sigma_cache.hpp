#pragma once

#include "lctcert/sigma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lctcert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "LCTCERT_CACHE";

// Single-file JSON cache of sigma witnesses keyed by (n, lambda, strict).
// Hits are re-verified (recount + mask feasibility) before use; entries that
// fail verification are dropped, so a corrupted file degrades to a miss.
class SigmaCache {
 public:
  SigmaCache() = default;

  static SigmaCache load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<SigmaResult> find(int n, const BigRational& lambda, bool strict) const;
  void put(const SigmaResult& result);

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    SigmaResult result;
    std::string tool_version;
    std::string timestamp;
  };
  std::vector<Entry> entries_;
};

}  // namespace lctcert
