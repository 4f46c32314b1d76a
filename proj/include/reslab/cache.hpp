#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "reslab/errors.hpp"

namespace reslab {

inline constexpr const char* kToolVersion = "reslab-1.0.0";

/// Lowercase hex SHA-256 of `text`.
inline std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

/// Deterministic cache key: hash of "<arrangement canonical form>|<op>|<args>".
inline std::string cache_key(const std::string& arrangement_form, const std::string& op, const std::string& args) {
  return sha256_hex(arrangement_form + "|" + op + "|" + args);
}

struct CacheRecord {
  std::string key;
  nlohmann::ordered_json value;
  std::string created_at;
  std::string tool_version;
};

/// Append-only JSON-lines store. Each line is one CacheRecord. Writers take
/// an exclusive flock on the file for the duration of the append; readers
/// load the whole file once and skip lines that fail to parse.
class CacheStore {
 public:
  CacheStore(std::string path, std::string tool_version = kToolVersion, std::ostream* warnings = nullptr,
             std::chrono::milliseconds lock_timeout = std::chrono::milliseconds(5000))
      : path_(std::move(path)), version_(std::move(tool_version)), warnings_(warnings), lock_timeout_(lock_timeout) {
    load();
  }

  const std::string& path() const noexcept { return path_; }

  std::optional<CacheRecord> get(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end() || it->second.tool_version != version_) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void put(const std::string& key, nlohmann::ordered_json value) {
    CacheRecord rec{key, std::move(value), now_iso8601(), version_};
    const nlohmann::ordered_json line{{"key", rec.key}, {"value", rec.value},
                                      {"created_at", rec.created_at}, {"tool_version", rec.tool_version}};
    const std::string text = line.dump() + "\n";

    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw Error("cannot open cache file " + path_ + ": " + std::strerror(errno));
    const auto deadline = std::chrono::steady_clock::now() + lock_timeout_;
    while (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
      if (std::chrono::steady_clock::now() >= deadline) {
        ::close(fd);
        throw Error("timed out waiting for the cache lock on " + path_);
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    std::size_t written = 0;
    while (written < text.size()) {
      const ssize_t n = ::write(fd, text.data() + written, text.size() - written);
      if (n < 0) {
        ::flock(fd, LOCK_UN);
        ::close(fd);
        throw Error("cache write failed: " + std::string(std::strerror(errno)));
      }
      written += static_cast<std::size_t>(n);
    }
    ::flock(fd, LOCK_UN);
    ::close(fd);
    index_[rec.key] = std::move(rec);
  }

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t skipped_lines() const noexcept { return skipped_; }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        auto j = nlohmann::ordered_json::parse(line);
        CacheRecord rec{j.at("key").get<std::string>(), j.at("value"), j.at("created_at").get<std::string>(),
                        j.at("tool_version").get<std::string>()};
        index_[rec.key] = std::move(rec);
      } catch (const nlohmann::ordered_json::exception&) {
        ++skipped_;
        if (warnings_) *warnings_ << "warning: skipping corrupted cache record at " << path_ << ":" << lineno << "\n";
      }
    }
  }

  static std::string now_iso8601() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::string path_;
  std::string version_;
  std::ostream* warnings_;
  std::chrono::milliseconds lock_timeout_;
  std::unordered_map<std::string, CacheRecord> index_;
  std::size_t hits_ = 0, misses_ = 0, skipped_ = 0;
};

}  // namespace reslab
