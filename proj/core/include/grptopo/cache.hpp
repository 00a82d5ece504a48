#pragma once

#include <optional>
#include <string>

namespace grptopo {

/// Code version folded into every cache key; bump on breaking changes.
inline constexpr const char* kCodeVersion = "grptopo-0.1.0";

struct CacheConfig {
  std::string dir;      // empty: resolve from GRPTOPO_CACHE or ./.grptopo-cache
  bool enabled = true;

  std::string resolved_dir() const;
};

/// Content hash of (group canonical form, computation id, code version);
/// doubles as the cache file name.
std::string cache_key(const std::string& group_canonical, const std::string& computation_id);

std::optional<std::string> cache_get(const CacheConfig& cfg, const std::string& key);
void cache_put(const CacheConfig& cfg, const std::string& key, const std::string& payload);

}  // namespace grptopo
