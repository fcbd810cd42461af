#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbnn {

// Provenance block stamped into every artifact the tool writes.  Holds the
// invoked command line, the resolved configuration, and enough metadata to
// reproduce the run byte for byte (seed, RNG engine, version).
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config;
  std::optional<std::uint64_t> seed;
  std::string rng_name;
  std::string version;
  std::string timestamp_utc;
};

// Builds a manifest for the current process.  `command` should be the
// reassembled argv.  The timestamp is ISO 8601 UTC with second precision.
RunManifest make_manifest(const std::string& command,
                          const std::map<std::string, std::string>& config,
                          std::optional<std::uint64_t> seed);

std::string iso8601_utc_now();

// One line per manifest item, without comment markers.
std::vector<std::string> manifest_lines(const RunManifest& manifest);

// Renders the manifest as a block of '#'-prefixed comment lines suitable for
// the head of CSV and text outputs.  Every line starts with "# ".
std::string manifest_comment_block(const RunManifest& manifest);

}  // namespace pbnn
