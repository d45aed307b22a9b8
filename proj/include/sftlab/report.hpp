#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace sftlab {

inline constexpr const char* kToolName = "sftlab";
inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over raw bytes, rendered as fnv1a:<16 hex digits>
std::string fnv1a_hex(const std::string& bytes);
std::string hash_file(const std::string& path);

// Standard envelope: tool, version, command, spec hash, seed and parameters
// travel with every result so a report is reproducible from itself.
nlohmann::ordered_json report_envelope(const std::string& command,
                                       const nlohmann::ordered_json& params,
                                       const nlohmann::ordered_json& result);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace sftlab
