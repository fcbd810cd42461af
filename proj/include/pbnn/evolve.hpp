#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pbnn/attractor.hpp"
#include "pbnn/permutation.hpp"
#include "pbnn/rng.hpp"

namespace pbnn {

struct SearchConfig {
  int n = 17;
  int cn = 1;
  int m = 50;                // population size M
  std::int64_t g_m1 = 1000;  // part-1 generation cap
  int m_e = 50;              // EP sample size M_e
  std::int64_t g_max = 1000; // part-2 generation cap
  std::uint64_t seed = 0;
  int threads = 1;
  AnalyzeOptions analyze;

  void validate() const;
};

// One evaluated wiring. The permutation is always stored canonicalized; the
// fitness is the score of the best orbit of the corresponding network, as a
// numerator over the implied denominator 2^n.
struct Individual {
  Cpid id;
  std::int64_t f1_num = 0;
  std::optional<std::int64_t> gbpo_period;

  bool generates_gbpo() const { return gbpo_period.has_value(); }
};

// A certified discovery: re-evaluating the stored identifier reproduces a
// globally stable orbit with this period.
struct ArchiveEntry {
  Cpid id;
  std::int64_t period = 0;
  std::int64_t f1_num = 0;
  std::int64_t generation = 0;
  int part = 1;
  std::uint64_t seed = 0;
};

// Append-only archive of GBPO generators, deduplicated by canonical id.
class ExternalPopulation {
 public:
  // Returns false when an entry with the same canonical id already exists.
  bool add(ArchiveEntry entry);
  bool contains(const Cpid& id) const { return index_.count(id.perm().ids()) != 0; }

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ArchiveEntry> entries_;
  std::set<std::vector<int>> index_;
};

// Memoizes evaluations by canonical id; repeated ids across generations cost
// one attractor analysis per run.
class EvalCache {
 public:
  const Individual* find(const Cpid& id) const;
  void insert(Individual ind);
  std::size_t size() const { return map_.size(); }

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  std::unordered_map<std::vector<int>, Individual, VectorHash> map_;
};

// Two distinct positions in 0..n-1, uniform over unordered pairs.
std::pair<int, int> draw_distinct_pair(int n, Rng& rng);

// Uniform random permutation via the decreasing-index swap shuffle.
Permutation random_permutation(int n, Rng& rng);

// Swaps the values at two random distinct positions, then canonicalizes.
Permutation mutate(const Permutation& p, Rng& rng);

// Full attractor evaluation of one wiring, memoized by canonical id.
Individual evaluate(const Permutation& p, const SearchConfig& config,
                    EvalCache& cache);

// Top m by fitness, ties broken by ascending canonical id; output sorted.
std::vector<Individual> elitism_select(std::vector<Individual> candidates, int m);

struct GenerationLogRow {
  int part = 1;
  std::int64_t generation = 0;
  std::int64_t best_f1_num = 0;
  std::int64_t ep_size = 0;
  std::int64_t cache_hits = 0;  // hits during this generation's evaluation
};

struct Part1Result {
  bool found = false;
  std::vector<Individual> population;  // population of the last evaluated generation
  ExternalPopulation ep;
  std::int64_t generations = 0;  // index of the last evaluated generation
};

// Part 1, GBPO discovery: a population of M random walkers, re-evaluated and
// fully replaced by mutants each generation (no selection pressure). Stops
// at the first generation containing GBPO generators, archiving all of them,
// or after g_m1 mutations without a discovery.
Part1Result run_part1(const SearchConfig& config, Rng& rng, EvalCache& cache,
                      std::vector<GenerationLogRow>& log);

// Part 2, GBPO accumulation: each generation mutates the population plus up
// to M_e archive members, archives every offspring that generates a GBPO,
// and keeps the top M offspring as the next population (elitism over
// offspring only). Returns the grown archive after g_max generations.
ExternalPopulation run_part2(const Part1Result& found, const SearchConfig& config,
                             Rng& rng, EvalCache& cache,
                             std::vector<GenerationLogRow>& log);

struct SearchResult {
  SearchConfig config;
  bool part1_found = false;
  std::int64_t part1_generations = 0;
  ExternalPopulation ep;
  std::vector<GenerationLogRow> log;
};

// Part 1 followed (on discovery) by Part 2, with a single RNG stream.
SearchResult run_search(const SearchConfig& config);

}  // namespace pbnn
