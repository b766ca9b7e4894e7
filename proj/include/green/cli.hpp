#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "green/laurent.hpp"
#include "green/ls_solver.hpp"
#include "green/matrix.hpp"

namespace green::cli {

namespace fs = std::filesystem;

enum class Format { json, csv, latex };

struct RunConfig {
  std::string command;  // gen-a | omega | solve | ext | fake-degrees | verify | oracle | check
  std::optional<fs::path> group_path;
  std::optional<fs::path> springer_path;
  std::optional<fs::path> solution_path;
  std::optional<fs::path> out_path;
  std::optional<int> n;
  Format format = Format::json;
  Normalization normalization = Normalization::double_prime;
  std::vector<std::uint64_t> seeds;
  std::optional<fs::path> cache_dir;  // falls back to $GREEN_CACHE_DIR, then ~/.cache/green
  bool no_cache = false;
  std::optional<std::string> chi;    // solve: stalk report row
  std::optional<std::string> orbit;  // solve: stalk report orbit
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kInternalFailure = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/*
  On-disk cache of serialized tables, one file per key. Entries carry a
  digest of their payload; a mismatch or unreadable entry is reported on
  `warn` and treated as a miss so the caller recomputes and overwrites.
*/
class Cache {
 public:
  explicit Cache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

  /// Key over the schema version and all generating parameters.
  static std::string key_for(const nlohmann::json& parameters);

  bool enabled() const noexcept { return dir_.has_value(); }
  std::optional<std::string> get(const std::string& key, std::ostream& warn) const;
  void put(const std::string& key, const std::string& value) const;
  fs::path entry_path(const std::string& key) const;

 private:
  std::optional<fs::path> dir_;
};

std::optional<fs::path> resolve_cache_dir(const RunConfig& config);

// Rendering helpers.
std::string latex_poly(const LaurentPoly& p);
std::string latex_matrix(const Matrix<LaurentPoly>& m, const std::vector<std::string>& labels,
                         const std::string& name);
std::string csv_matrix(const Matrix<LaurentPoly>& m, const std::vector<std::string>& labels);

}  // namespace green::cli
