#include "cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "json.hpp"

namespace parry::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string file_stem(const std::string& key) {
  std::string out;
  for (char c : key) {
    if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z' && c != 'e' && c != 'p' && c != 'm' && c != 'u'))
      out += c;
    else if (c == '^')
      out += 'e';
    else if (c == '+')
      out += 'p';
    else if (c == '-')
      out += 'm';
    else {
      static const char* hex = "0123456789abcdef";
      out += 'u';
      out += hex[(static_cast<unsigned char>(c) >> 4) & 15];
      out += hex[static_cast<unsigned char>(c) & 15];
    }
  }
  return out;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::path_for(const std::string& kind, const std::string& key) const {
  return dir_ / (kind + "_" + file_stem(key) + ".json");
}

std::optional<CacheRecord> Cache::lookup(const std::string& kind, const std::string& key, const Budgets& want) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(kind, key));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    CacheRecord r;
    r.key = j.at("key").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    if (r.key != key || r.kind != kind) return std::nullopt;
    const auto& b = j.at("budgets");
    r.budgets = {b.at("orbit").get<std::size_t>(), b.at("akiyama").get<std::size_t>(),
                 b.at("precision_max").get<long>(), b.at("salem_prefix").get<std::size_t>()};
    r.version = j.at("version").get<std::string>();
    r.value = j.at("value").get<std::string>();
    if (!r.budgets.covers(want)) return std::nullopt;
    return r;
  } catch (const json::exception&) {
    return std::nullopt;   // corrupt or foreign file: recompute
  }
}

void Cache::store(const CacheRecord& rec) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  json j;
  j["key"] = rec.key;
  j["kind"] = rec.kind;
  j["budgets"] = {{"orbit", rec.budgets.orbit},
                  {"akiyama", rec.budgets.akiyama},
                  {"precision_max", rec.budgets.precision_max},
                  {"salem_prefix", rec.budgets.salem_prefix}};
  j["version"] = rec.version;
  j["value"] = rec.value;

  static std::atomic<unsigned> counter{0};
  const fs::path final_path = path_for(rec.kind, rec.key);
  std::ostringstream tmp_name;
  tmp_name << final_path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << j.dump(1) << '\n';
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace parry::cli
