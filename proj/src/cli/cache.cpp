#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "green/cli.hpp"
#include "green/io.hpp"

namespace green::cli {

std::string Cache::key_for(const nlohmann::json& parameters) { return sha256_hex(parameters.dump()); }

fs::path Cache::entry_path(const std::string& key) const { return *dir_ / (key + ".json"); }

std::optional<std::string> Cache::get(const std::string& key, std::ostream& warn) const {
  if (!dir_) return std::nullopt;
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto entry = nlohmann::json::parse(buf.str());
    const auto value = entry.at("value").get<std::string>();
    if (entry.at("key").get<std::string>() == key && entry.at("sha256").get<std::string>() == sha256_hex(value))
      return value;
  } catch (const nlohmann::json::exception&) {
  }
  warn << "warning: cache entry " << path.string() << " is corrupt; recomputing\n";
  return std::nullopt;
}

void Cache::put(const std::string& key, const std::string& value) const {
  if (!dir_) return;
  const nlohmann::json entry{{"key", key}, {"sha256", sha256_hex(value)}, {"value", value}};
  write_file_atomic(entry_path(key), entry.dump() + "\n");
}

std::optional<fs::path> resolve_cache_dir(const RunConfig& config) {
  if (config.no_cache) return std::nullopt;
  if (config.cache_dir) return config.cache_dir;
  if (const char* env = std::getenv("GREEN_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "green";
  return std::nullopt;
}

}  // namespace green::cli
