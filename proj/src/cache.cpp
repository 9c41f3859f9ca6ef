#include "cubemob/cache.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace cubemob {

namespace {

constexpr char kMagic[4] = {'C', 'B', 'M', 'B'};

void write_u16(std::ostream& out, std::uint16_t v) {
  for (int i = 0; i < 2; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void write_u32(std::ostream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
void write_u64(std::ostream& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

bool read_bytes(std::istream& in, char* buffer, std::size_t count) {
  in.read(buffer, static_cast<std::streamsize>(count));
  return static_cast<std::size_t>(in.gcount()) == count;
}
bool read_u16(std::istream& in, std::uint16_t& v) {
  char b[2];
  if (!read_bytes(in, b, 2)) return false;
  v = 0;
  for (int i = 1; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
  return true;
}
bool read_u32(std::istream& in, std::uint32_t& v) {
  char b[4];
  if (!read_bytes(in, b, 4)) return false;
  v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
  return true;
}
bool read_u64(std::istream& in, std::uint64_t& v) {
  char b[8];
  if (!read_bytes(in, b, 8)) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
  return true;
}

}  // namespace

Cache::Cache(std::string directory) {
  if (directory.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    std::cerr << "cubemob: cache disabled, cannot create directory " << directory << "\n";
    return;
  }
  path_ = (std::filesystem::path(directory) / "cubemob.cache").string();
  enabled_ = true;
  load();
}

void Cache::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // no file yet
  char magic[4];
  std::uint8_t version = 0;
  if (!read_bytes(in, magic, 4) || std::string(magic, 4) != std::string(kMagic, 4)) {
    std::cerr << "cubemob: discarding corrupt cache file " << path_ << "\n";
    return;
  }
  version = static_cast<std::uint8_t>(in.get());
  if (version != kSchemaVersion) return;  // forced miss for every entry
  while (true) {
    std::uint16_t kind_len;
    if (!read_u16(in, kind_len)) break;  // clean end of file
    std::string kind(kind_len, '\0');
    std::uint32_t n, count;
    std::uint64_t hash, created;
    if (!read_bytes(in, kind.data(), kind_len) || !read_u32(in, n) || !read_u64(in, hash) ||
        !read_u64(in, created) || !read_u32(in, count)) {
      std::cerr << "cubemob: discarding truncated cache record in " << path_ << "\n";
      return;
    }
    std::vector<std::string> payload(count);
    for (auto& item : payload) {
      std::uint32_t len;
      if (!read_u32(in, len)) {
        std::cerr << "cubemob: discarding truncated cache record in " << path_ << "\n";
        return;
      }
      item.resize(len);
      if (!read_bytes(in, item.data(), len)) {
        std::cerr << "cubemob: discarding truncated cache record in " << path_ << "\n";
        return;
      }
    }
    Key key{kind, static_cast<int>(n), hash};
    entries_[key] = std::move(payload);
    created_[key] = created;
  }
}

void Cache::flush() {
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cubemob: cache write failed, continuing without cache\n";
      enabled_ = false;
      return;
    }
    out.write(kMagic, 4);
    out.put(static_cast<char>(kSchemaVersion));
    for (const auto& [key, payload] : entries_) {
      const auto& [kind, n, hash] = key;
      write_u16(out, static_cast<std::uint16_t>(kind.size()));
      out.write(kind.data(), static_cast<std::streamsize>(kind.size()));
      write_u32(out, static_cast<std::uint32_t>(n));
      write_u64(out, hash);
      write_u64(out, created_.at(key));
      write_u32(out, static_cast<std::uint32_t>(payload.size()));
      for (const auto& item : payload) {
        write_u32(out, static_cast<std::uint32_t>(item.size()));
        out.write(item.data(), static_cast<std::streamsize>(item.size()));
      }
    }
    if (!out) {
      std::cerr << "cubemob: cache write failed, continuing without cache\n";
      enabled_ = false;
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) {
    std::cerr << "cubemob: cache rename failed, continuing without cache\n";
    std::filesystem::remove(tmp, ec);
    enabled_ = false;
  }
}

std::optional<std::vector<std::string>> Cache::get(const std::string& kind, int n,
                                                   std::uint64_t key_hash) const {
  if (!enabled_) return std::nullopt;
  auto it = entries_.find(Key{kind, n, key_hash});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const std::string& kind, int n, std::uint64_t key_hash,
                const std::vector<std::string>& payload) {
  if (!enabled_) return;
  Key key{kind, n, key_hash};
  entries_[key] = payload;
  if (!created_.count(key))
    created_[key] = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
            .count());
  flush();
}

}  // namespace cubemob
