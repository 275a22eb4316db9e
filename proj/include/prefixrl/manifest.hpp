#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace prefixrl {

inline constexpr const char* kArtifactVersion = "0.1.0";

// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

// Writes manifest.json next to the outputs: effective config, artifact
// version, creation timestamp and a digest per output file. Written to a
// temporary file first and renamed into place.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const nlohmann::json& config,
                    const std::vector<std::string>& output_files);

}  // namespace prefixrl
