#include "grptopo/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace grptopo {

namespace {

uint64_t fnv1a(const std::string& s, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string CacheConfig::resolved_dir() const {
  if (!dir.empty()) return dir;
  if (const char* env = std::getenv("GRPTOPO_CACHE")) return env;
  return ".grptopo-cache";
}

std::string cache_key(const std::string& group_canonical, const std::string& computation_id) {
  std::string blob = group_canonical + "\x1f" + computation_id + "\x1f" + kCodeVersion;
  uint64_t a = fnv1a(blob, 0xcbf29ce484222325ULL);
  uint64_t b = fnv1a(blob, 0x9ae16a3b2f90404fULL);
  std::ostringstream os;
  os << std::hex << a << '-' << b;
  return os.str();
}

std::optional<std::string> cache_get(const CacheConfig& cfg, const std::string& key) {
  if (!cfg.enabled) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(cfg.resolved_dir()) / key;
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void cache_put(const CacheConfig& cfg, const std::string& key, const std::string& payload) {
  if (!cfg.enabled) return;
  std::filesystem::path dir(cfg.resolved_dir());
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  std::filesystem::path tmp = dir / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << payload;
  }
  std::filesystem::rename(tmp, dir / key, ec);
}

}  // namespace grptopo
