#include "prefixrl/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace prefixrl {

namespace fs = std::filesystem;

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(hex);
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const nlohmann::json& config,
                    const std::vector<std::string>& output_files) {
  nlohmann::json manifest;
  manifest["artifact_version"] = kArtifactVersion;
  manifest["command"] = command;
  manifest["config"] = config;

  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  manifest["created_utc"] = stamp;

  manifest["outputs"] = nlohmann::json::array();
  for (const std::string& file : output_files) {
    const fs::path p = fs::path(out_dir) / file;
    manifest["outputs"].push_back({{"file", file}, {"fnv1a64", file_digest(p.string())}});
  }

  const fs::path final_path = fs::path(out_dir) / "manifest.json";
  const fs::path tmp_path = fs::path(out_dir) / "manifest.json.tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + tmp_path.string());
    out << manifest.dump(2) << '\n';
  }
  fs::rename(tmp_path, final_path);
}

}  // namespace prefixrl
