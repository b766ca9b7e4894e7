#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace green {

/// Reads and parses a JSON document; throws ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Writes via a temporary sibling file and rename, so readers never see a
/// partially written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& bytes);

/// "sha256:<hex>" over the compact dump of j (object keys are sorted).
std::string content_hash(const nlohmann::json& j);

/// Fetches j[key] or throws ParseError naming the missing field.
const nlohmann::json& require_field(const nlohmann::json& j, const char* key, const std::string& context);

}  // namespace green
