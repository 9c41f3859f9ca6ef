#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cubemob {

// Single-file persistent cache for integer tables (Moebius rows). Entries
// are keyed by (computation kind, n, content hash); payloads are decimal
// strings so round trips are bit-exact. A corrupt or version-mismatched
// file is discarded with a warning; I/O failures degrade to cache-off.
class Cache {
 public:
  Cache() = default;  // disabled
  explicit Cache(std::string directory);

  bool enabled() const { return enabled_; }

  std::optional<std::vector<std::string>> get(const std::string& kind, int n, std::uint64_t key_hash) const;
  void put(const std::string& kind, int n, std::uint64_t key_hash, const std::vector<std::string>& payload);

  static constexpr std::uint8_t kSchemaVersion = 1;

 private:
  using Key = std::tuple<std::string, int, std::uint64_t>;

  void load();
  void flush();

  bool enabled_ = false;
  std::string path_;
  std::map<Key, std::vector<std::string>> entries_;
  std::map<Key, std::uint64_t> created_;  // creation metadata, file-only
};

}  // namespace cubemob
