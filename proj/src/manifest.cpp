#include "pbnn/manifest.hpp"

#include <ctime>
#include <sstream>

#include "pbnn/rng.hpp"
#include "pbnn/version.hpp"

namespace pbnn {

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
#if defined(_WIN32)
  gmtime_s(&tm_utc, &now);
#else
  gmtime_r(&now, &tm_utc);
#endif
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

RunManifest make_manifest(const std::string& command,
                          const std::map<std::string, std::string>& config,
                          std::optional<std::uint64_t> seed) {
  RunManifest m;
  m.command = command;
  m.config = config;
  m.seed = seed;
  m.rng_name = Rng::kName;
  m.version = kToolVersion;
  m.timestamp_utc = iso8601_utc_now();
  return m;
}

std::vector<std::string> manifest_lines(const RunManifest& manifest) {
  std::vector<std::string> lines;
  lines.push_back(std::string(kToolName) + " " + manifest.version);
  lines.push_back("command: " + manifest.command);
  lines.push_back("timestamp: " + manifest.timestamp_utc);
  if (manifest.seed) {
    lines.push_back("seed: " + std::to_string(*manifest.seed));
    lines.push_back("rng: " + manifest.rng_name);
  }
  for (const auto& [key, value] : manifest.config) {
    lines.push_back("config " + key + ": " + value);
  }
  return lines;
}

std::string manifest_comment_block(const RunManifest& manifest) {
  std::ostringstream out;
  for (const std::string& line : manifest_lines(manifest)) {
    out << "# " << line << "\n";
  }
  return out.str();
}

}  // namespace pbnn
