#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbnn/attractor.hpp"
#include "pbnn/evolve.hpp"
#include "pbnn/manifest.hpp"

namespace pbnn {

// JSON renderers.  All machine-readable files embed the run manifest; hex is
// the authoritative state encoding inside them.

std::string report_to_json(const AttractorReport& report,
                           const RunManifest& manifest, int indent = 2);

std::string search_result_to_json(const SearchResult& result,
                                  const RunManifest& manifest, int indent = 2);

std::string hdl_metadata_json(int n, int cn, const Permutation& p,
                              const RunManifest& manifest, int indent = 2);

// Reads an archive dump produced by search_result_to_json.  Also accepts a
// bare JSON array of entries.  Malformed documents raise ParseError whose
// message names the offending field path, e.g. "ep[3].period".
std::vector<ArchiveEntry> read_ep_json(const std::string& text);

std::string generation_log_csv(const SearchResult& result,
                               const RunManifest& manifest);

}  // namespace pbnn
