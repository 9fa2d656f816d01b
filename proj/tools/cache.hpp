#pragma once

// On-disk cache of completed classifications: one JSON file per canonical
// key, written atomically, reused only when it was computed under budgets at
// least as large as the ones requested.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

namespace parry::cli {

struct Budgets {
  std::size_t orbit = 0;
  std::size_t akiyama = 0;
  long precision_max = 0;
  std::size_t salem_prefix = 0;

  bool covers(const Budgets& want) const {
    return orbit >= want.orbit && akiyama >= want.akiyama && precision_max >= want.precision_max &&
           salem_prefix >= want.salem_prefix;
  }
};

struct CacheRecord {
  std::string key;
  std::string kind;      // "spectrum", "status", "census"
  Budgets budgets;
  std::string version;
  std::string value;     // serialized payload
};

class Cache {
 public:
  // Empty dir disables the cache.
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<CacheRecord> lookup(const std::string& kind, const std::string& key, const Budgets& want) const;
  void store(const CacheRecord& rec) const;
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

// Filesystem-safe, injective rendering of a polynomial string.
std::string file_stem(const std::string& key);

}  // namespace parry::cli
