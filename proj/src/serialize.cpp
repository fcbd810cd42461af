#include "pbnn/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "pbnn/errors.hpp"
#include "pbnn/version.hpp"

namespace pbnn {

namespace {

using nlohmann::json;

json manifest_json(const RunManifest& m) {
  json j;
  j["tool"] = kToolName;
  j["version"] = m.version;
  j["command"] = m.command;
  j["timestamp"] = m.timestamp_utc;
  if (m.seed) {
    j["seed"] = *m.seed;
    j["rng"] = m.rng_name;
  }
  if (!m.config.empty()) j["config"] = m.config;
  return j;
}

json config_json(const SearchConfig& c) {
  json j;
  j["n"] = c.n;
  j["cn"] = c.cn;
  j["m"] = c.m;
  j["g_m1"] = c.g_m1;
  j["m_e"] = c.m_e;
  j["g_max"] = c.g_max;
  j["seed"] = c.seed;
  return j;
}

json entry_json(const ArchiveEntry& e) {
  json j;
  j["cpid"] = e.id.perm().to_string();
  j["period"] = e.period;
  j["f1_num"] = e.f1_num;
  j["generation"] = e.generation;
  j["part"] = e.part;
  j["seed"] = e.seed;
  return j;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("archive dump: field " + path + " " + what, 0);
}

template <typename T>
T require(const json& node, const std::string& path, const char* key) {
  const std::string field = path + "." + key;
  if (!node.is_object()) schema_error(path, "is not an object");
  const auto it = node.find(key);
  if (it == node.end()) schema_error(field, "is missing");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    schema_error(field, "has the wrong type");
  }
}

ArchiveEntry parse_entry(const json& node, const std::string& path) {
  ArchiveEntry e{Cpid(Permutation::parse(require<std::string>(node, path, "cpid"))),
                 require<std::int64_t>(node, path, "period"),
                 require<std::int64_t>(node, path, "f1_num"),
                 require<std::int64_t>(node, path, "generation"),
                 require<int>(node, path, "part"),
                 require<std::uint64_t>(node, path, "seed")};
  if (e.period <= 0) schema_error(path + ".period", "must be positive");
  if (e.f1_num <= 0) schema_error(path + ".f1_num", "must be positive");
  if (e.part != 1 && e.part != 2) schema_error(path + ".part", "must be 1 or 2");
  return e;
}

}  // namespace

std::string report_to_json(const AttractorReport& report,
                           const RunManifest& manifest, int indent) {
  json j;
  j["manifest"] = manifest_json(manifest);
  j["n"] = report.net().n();
  j["cn"] = report.net().cn();
  j["permutation"] = report.net().sigma().to_string();
  json orbits = json::array();
  for (const Orbit& o : report.orbits()) {
    json row;
    row["period"] = o.period;
    row["basin_size"] = o.basin_size;
    row["min_state_hex"] = BinaryState(report.net().n(), o.min_state).to_hex();
    row["contains_endpoint"] = o.contains_endpoint;
    row["f1_num"] = f1_numerator(o);
    orbits.push_back(std::move(row));
  }
  j["orbits"] = std::move(orbits);
  j["f1_best_num"] = report.f1_best_num();
  if (const auto p = report.gbpo_period()) j["gbpo_period"] = *p;
  return j.dump(indent) + "\n";
}

std::string search_result_to_json(const SearchResult& result,
                                  const RunManifest& manifest, int indent) {
  json j;
  j["manifest"] = manifest_json(manifest);
  j["search"] = config_json(result.config);
  j["part1_found"] = result.part1_found;
  j["part1_generations"] = result.part1_generations;
  json ep = json::array();
  for (const ArchiveEntry& e : result.ep.entries()) ep.push_back(entry_json(e));
  j["ep"] = std::move(ep);
  return j.dump(indent) + "\n";
}

std::string hdl_metadata_json(int n, int cn, const Permutation& p,
                              const RunManifest& manifest, int indent) {
  json j;
  j["manifest"] = manifest_json(manifest);
  j["n"] = n;
  j["cn"] = cn;
  j["permutation"] = p.to_string();
  j["files"] = json::array({"HL.sv", "OL.sv"});
  return j.dump(indent) + "\n";
}

std::vector<ArchiveEntry> read_ep_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("archive dump: ") + err.what(),
                     static_cast<std::size_t>(err.byte));
  }

  const json* list = nullptr;
  std::string base;
  if (doc.is_array()) {
    list = &doc;
    base = "$";
  } else if (doc.is_object()) {
    const auto it = doc.find("ep");
    if (it == doc.end()) schema_error("$.ep", "is missing");
    if (!it->is_array()) schema_error("$.ep", "is not an array");
    list = &*it;
    base = "$.ep";
  } else {
    schema_error("$", "is neither an object nor an array");
  }

  std::vector<ArchiveEntry> entries;
  entries.reserve(list->size());
  for (std::size_t i = 0; i < list->size(); ++i) {
    std::ostringstream path;
    path << base << "[" << i << "]";
    entries.push_back(parse_entry((*list)[i], path.str()));
  }
  return entries;
}

std::string generation_log_csv(const SearchResult& result,
                               const RunManifest& manifest) {
  std::ostringstream out;
  out << manifest_comment_block(manifest);
  out << "part,generation,best_f1_num,ep_size,cache_hits\n";
  for (const GenerationLogRow& row : result.log) {
    out << row.part << "," << row.generation << "," << row.best_f1_num << ","
        << row.ep_size << "," << row.cache_hits << "\n";
  }
  return out.str();
}

}  // namespace pbnn
