// pbnn: simulate, decompose and search permutation binary neural networks,
// and emit their hardware description.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbnn/attractor.hpp"
#include "pbnn/errors.hpp"
#include "pbnn/evolve.hpp"
#include "pbnn/hdlgen.hpp"
#include "pbnn/manifest.hpp"
#include "pbnn/net.hpp"
#include "pbnn/report.hpp"
#include "pbnn/serialize.hpp"
#include "pbnn/version.hpp"

namespace fs = std::filesystem;
using namespace pbnn;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRefused = 2;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void warn_if_composite(int n) {
  if (!is_prime(n)) {
    std::cerr << "warning: n=" << n
              << " is composite; the intended regime is prime n (composite"
                 " rings admit degenerate rotation symmetries)\n";
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write to '" + path.string() + "' failed");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The manifest records the canonical reproduction command (resolved
// semantic flags, auto-generated seed included), not the raw argv: rerunning
// it byte-reproduces the artifact even when the original invocation relied
// on defaults, env vars or seed autogeneration.
std::string reproduction_command(const std::string& sub,
                                 const std::map<std::string, std::string>& config) {
  std::string cmd = std::string(kToolName) + " " + sub;
  for (const auto& [key, value] : config) {
    if (value.find(' ') != std::string::npos) {
      cmd += " --" + key + " \"" + value + "\"";
    } else {
      cmd += " --" + key + " " + value;
    }
  }
  return cmd;
}

RunManifest command_manifest(const std::string& sub,
                             const std::map<std::string, std::string>& config,
                             std::optional<std::uint64_t> seed = std::nullopt) {
  return make_manifest(reproduction_command(sub, config), config, seed);
}

struct NetArgs {
  int n = 0;
  int cn = 0;
  std::string perm;

  void add_to(CLI::App& cmd, bool perm_required = true) {
    cmd.add_option("--n", n, "Number of neurons (ring size)")
        ->required()
        ->check(CLI::Range(kMinDimension, kMaxDimension));
    cmd.add_option("--cn", cn, "Connection number selecting the weight triple")
        ->required()
        ->check(CLI::Range(0, 7));
    auto* opt = cmd.add_option(
        "--perm", perm,
        "Permutation identifier, 1-based, e.g. \"1 5 2 6 3 7 4\"");
    if (perm_required) opt->required();
  }

  Permutation permutation() const {
    Permutation p = perm.empty() ? Permutation::identity(n) : Permutation::parse(perm);
    if (p.size() != n) {
      throw ParseError("permutation has " + std::to_string(p.size()) +
                           " entries but n=" + std::to_string(n),
                       0);
    }
    return p;
  }
};

int run_simulate(const NetArgs& net_args, const std::string& x0_text,
                 std::int64_t steps, const fs::path& outdir) {
  warn_if_composite(net_args.n);
  const Permutation p = net_args.permutation();
  const Pbnn net(net_args.n, net_args.cn, p);
  const BinaryState x0 = BinaryState::parse(x0_text, net_args.n);

  const std::vector<BinaryState> traj = trajectory(x0, net, steps);

  std::map<std::string, std::string> config = {
      {"cn", std::to_string(net_args.cn)},
      {"n", std::to_string(net_args.n)},
      {"perm", p.to_string()},
      {"steps", std::to_string(steps)},
      {"x0", x0.to_hex()},
  };
  const RunManifest manifest = command_manifest("simulate", config);

  fs::create_directories(outdir);
  write_file(outdir / "raster.txt",
             manifest_comment_block(manifest) + raster_text(traj));
  write_file(outdir / "raster.pbm", raster_pbm(traj, manifest_lines(manifest)));

  std::ostringstream csv;
  csv << manifest_comment_block(manifest);
  csv << "t,state_hex,state_pm\n";
  for (std::size_t t = 0; t < traj.size(); ++t) {
    csv << t << "," << traj[t].to_hex() << "," << traj[t].to_pm_string() << "\n";
  }
  write_file(outdir / "trajectory.csv", csv.str());

  std::cout << "wrote " << (outdir / "raster.txt").string() << ", "
            << (outdir / "raster.pbm").string() << ", "
            << (outdir / "trajectory.csv").string() << "\n";
  return 0;
}

int run_canon(const std::string& perm_text) {
  const Permutation p = Permutation::parse(perm_text);
  std::cout << Cpid(p).perm().to_string() << "\n";
  return 0;
}

int run_analyze(const NetArgs& net_args, int max_n, const std::string& out) {
  warn_if_composite(net_args.n);
  const Permutation p = net_args.permutation();
  AnalyzeOptions options;
  options.max_dimension = max_n;
  const AttractorReport report = analyze(Pbnn(net_args.n, net_args.cn, p), options);

  std::map<std::string, std::string> config = {
      {"cn", std::to_string(net_args.cn)},
      {"n", std::to_string(net_args.n)},
      {"perm", p.to_string()},
  };
  const std::string json = report_to_json(report, command_manifest("analyze", config));
  if (out == "-") {
    std::cout << json;
  } else {
    write_file(out, json);
  }
  return 0;
}

int run_search(SearchConfig config, bool seed_given, const fs::path& outdir) {
  warn_if_composite(config.n);
  if (!seed_given) {
    std::random_device rd;
    config.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cout << "seed: " << config.seed << " (auto-generated)\n";
  }
  config.validate();

  const SearchResult result = run_search(config);

  std::map<std::string, std::string> mconfig = {
      {"cn", std::to_string(config.cn)},
      {"gm1", std::to_string(config.g_m1)},
      {"gmax", std::to_string(config.g_max)},
      {"m", std::to_string(config.m)},
      {"me", std::to_string(config.m_e)},
      {"n", std::to_string(config.n)},
      {"seed", std::to_string(config.seed)},
  };
  const RunManifest manifest = command_manifest("search", mconfig, config.seed);

  fs::create_directories(outdir);
  write_file(outdir / "ep.json", search_result_to_json(result, manifest));
  write_file(outdir / "generations.csv", generation_log_csv(result, manifest));

  std::cout << "part 1: " << (result.part1_found ? "found" : "exhausted")
            << " after generation " << result.part1_generations << "\n";
  std::cout << "archive: " << result.ep.size() << " identifiers\n";
  if (!result.ep.empty()) {
    const PeriodDistribution d = cumulative_distribution(result.ep);
    std::cout << "max period: " << d.p_max << "\n";
  }
  std::cout << "wrote " << (outdir / "ep.json").string() << ", "
            << (outdir / "generations.csv").string() << "\n";
  return 0;
}

int run_dist(const fs::path& ep_path, const std::string& out,
             bool distinct_periods) {
  const std::vector<ArchiveEntry> entries = read_ep_json(read_file(ep_path));
  std::vector<std::int64_t> periods;
  periods.reserve(entries.size());
  for (const ArchiveEntry& e : entries) periods.push_back(e.period);
  const PeriodDistribution d =
      cumulative_distribution(std::move(periods), distinct_periods);

  std::map<std::string, std::string> config = {
      {"distinct-periods", distinct_periods ? "true" : "false"},
      {"input", ep_path.string()},
  };
  const RunManifest manifest = command_manifest("dist", config);

  std::ostringstream csv;
  write_distribution_csv(d, csv, manifest_lines(manifest));
  if (out == "-") {
    std::cout << csv.str();
  } else {
    write_file(out, csv.str());
  }
  return 0;
}

int run_emit_hdl(const NetArgs& net_args, const fs::path& outdir) {
  warn_if_composite(net_args.n);
  const Permutation p = net_args.permutation();
  const HdlArtifact art = emit_hdl(net_args.n, net_args.cn, p);

  std::map<std::string, std::string> config = {
      {"cn", std::to_string(net_args.cn)},
      {"n", std::to_string(net_args.n)},
      {"perm", p.to_string()},
  };
  const RunManifest manifest = command_manifest("emit-hdl", config);

  fs::create_directories(outdir);
  write_file(outdir / "HL.sv", art.hidden_source);
  write_file(outdir / "OL.sv", art.output_source);
  write_file(outdir / "metadata.json",
             hdl_metadata_json(net_args.n, net_args.cn, p, manifest));
  std::cout << "wrote " << (outdir / "HL.sv").string() << ", "
            << (outdir / "OL.sv").string() << ", "
            << (outdir / "metadata.json").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               " - permutation binary neural network toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  int exit_code = 0;

  // simulate
  NetArgs sim_net;
  std::string sim_x0 = "0x1";
  std::int64_t sim_steps = 50;
  std::string sim_outdir = ".";
  auto* sim = app.add_subcommand(
      "simulate", "Iterate a network and write raster and trajectory files");
  sim_net.add_to(*sim);
  sim->add_option("--x0", sim_x0, "Initial state, +/- string or hex word");
  sim->add_option("--steps", sim_steps, "Number of steps to iterate")
      ->check(CLI::NonNegativeNumber);
  sim->add_option("--outdir", sim_outdir, "Output directory");
  sim->set_config("--config");
  sim->callback([&] { exit_code = run_simulate(sim_net, sim_x0, sim_steps, sim_outdir); });

  // canon
  std::string canon_perm;
  auto* canon = app.add_subcommand(
      "canon", "Print the canonical (shift-minimal) form of a permutation");
  canon->add_option("perm", canon_perm, "Permutation, e.g. \"3 2 1\"")->required();
  canon->callback([&] { exit_code = run_canon(canon_perm); });

  // analyze
  NetArgs ana_net;
  int ana_max_n = AnalyzeOptions{}.max_dimension;
  std::string ana_out = "-";
  auto* ana = app.add_subcommand(
      "analyze", "Exhaustively decompose the state space into orbits");
  ana_net.add_to(*ana);
  ana->add_option("--max-n", ana_max_n,
                  "Exhaustive-analysis refusal bound (hard ceiling " +
                      std::to_string(kMaxExhaustiveDimension) + ")")
      ->check(CLI::Range(kMinDimension, kMaxExhaustiveDimension));
  ana->add_option("--out", ana_out, "Report file, '-' for stdout");
  ana->set_config("--config");
  ana->callback([&] { exit_code = run_analyze(ana_net, ana_max_n, ana_out); });

  // search
  SearchConfig search_cfg;
  std::string search_outdir = ".";
  auto* sea = app.add_subcommand(
      "search", "Evolutionary search for globally stable orbits");
  sea->add_option("--n", search_cfg.n, "Number of neurons")
      ->check(CLI::Range(kMinDimension, kMaxDimension));
  sea->add_option("--cn", search_cfg.cn, "Connection number")
      ->check(CLI::Range(0, 7));
  sea->add_option("--m", search_cfg.m, "Population size");
  sea->add_option("--gm1", search_cfg.g_m1, "Stage-1 generation cap");
  sea->add_option("--me", search_cfg.m_e, "Archive sample size per generation");
  sea->add_option("--gmax", search_cfg.g_max, "Stage-2 generation count");
  auto* seed_opt =
      sea->add_option("--seed", search_cfg.seed, "RNG seed (auto-generated if absent)");
  sea->add_option("--threads", search_cfg.threads,
                  "Worker thread cap for evaluation")
      ->envname("PBNN_THREADS")
      ->check(CLI::PositiveNumber);
  sea->add_option("--outdir", search_outdir, "Output directory");
  sea->set_config("--config");
  sea->callback([&] {
    exit_code = run_search(search_cfg, seed_opt->count() > 0, search_outdir);
  });

  // dist
  std::string dist_input;
  std::string dist_out = "-";
  bool dist_distinct = false;
  auto* dist = app.add_subcommand(
      "dist", "Cumulative period distribution of an archive dump");
  dist->add_option("ep-file", dist_input, "Archive dump (ep.json)")->required();
  dist->add_option("--out", dist_out, "CSV file, '-' for stdout");
  dist->add_flag("--distinct-periods", dist_distinct,
                 "Count distinct period values instead of archive entries");
  dist->callback([&] { exit_code = run_dist(dist_input, dist_out, dist_distinct); });

  // emit-hdl
  NetArgs hdl_net;
  std::string hdl_outdir = ".";
  auto* hdl = app.add_subcommand(
      "emit-hdl", "Emit SystemVerilog sources for a configured network");
  hdl_net.add_to(*hdl);
  hdl->add_option("--outdir", hdl_outdir, "Output directory");
  hdl->set_config("--config");
  hdl->callback([&] { exit_code = run_emit_hdl(hdl_net, hdl_outdir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  }
  return exit_code;
}
