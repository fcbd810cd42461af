#include "pbnn/evolve.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pbnn {

void SearchConfig::validate() const {
  check_dimension(n);
  check_connection_number(cn);
  if (m < 1) throw std::invalid_argument("population size m must be >= 1");
  if (m_e < 1) throw std::invalid_argument("EP sample size m_e must be >= 1");
  if (g_m1 < 0) throw std::invalid_argument("g_m1 must be >= 0");
  if (g_max < 0) throw std::invalid_argument("g_max must be >= 0");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const int bound = std::min(analyze.max_dimension, kMaxExhaustiveDimension);
  if (n > bound) {
    throw BoundError("search refused: every evaluation needs an exhaustive "
                     "analysis and n=" + std::to_string(n) +
                     " exceeds the bound " + std::to_string(bound));
  }
}

bool ExternalPopulation::add(ArchiveEntry entry) {
  if (!index_.insert(entry.id.perm().ids()).second) return false;
  entries_.push_back(std::move(entry));
  return true;
}

std::size_t EvalCache::VectorHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

const Individual* EvalCache::find(const Cpid& id) const {
  const auto it = map_.find(id.perm().ids());
  return it == map_.end() ? nullptr : &it->second;
}

void EvalCache::insert(Individual ind) {
  map_.emplace(ind.id.perm().ids(), std::move(ind));
}

std::pair<int, int> draw_distinct_pair(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("need n >= 2 to draw a pair");
  const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (k >= j) ++k;
  return {j, k};
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 1);
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(ids));
}

Permutation mutate(const Permutation& p, Rng& rng) {
  const auto [j, k] = draw_distinct_pair(p.size(), rng);
  std::vector<int> ids = p.ids();
  std::swap(ids[static_cast<std::size_t>(j)], ids[static_cast<std::size_t>(k)]);
  return canonicalize(Permutation(std::move(ids)));
}

namespace {

Individual compute_individual(const Cpid& id, const SearchConfig& config) {
  const AttractorReport report =
      analyze(Pbnn(config.n, config.cn, id.perm()), config.analyze);
  return Individual{id, report.f1_best_num(), report.gbpo_period()};
}

// Evaluates a generation of candidates. Fresh canonical ids are analyzed
// (in parallel when configured), then inserted into the cache in
// first-occurrence order, so results are identical for any thread count.
std::vector<Individual> evaluate_batch(const std::vector<Cpid>& ids,
                                       const SearchConfig& config,
                                       EvalCache& cache,
                                       std::int64_t& hits_out) {
  std::vector<const Cpid*> missing;
  std::set<std::vector<int>> scheduled;
  std::int64_t hits = 0;
  for (const Cpid& id : ids) {
    if (cache.find(id) != nullptr) {
      ++hits;
    } else if (scheduled.insert(id.perm().ids()).second) {
      missing.push_back(&id);
    } else {
      ++hits;  // duplicate within this generation, one analysis serves both
    }
  }

  std::vector<std::optional<Individual>> fresh(missing.size());
  const int workers = std::max(
      1, std::min<int>(config.threads, static_cast<int>(missing.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < missing.size(); ++i) {
      fresh[i] = compute_individual(*missing[i], config);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < fresh.size();
               i = next.fetch_add(1)) {
            fresh[i] = compute_individual(*missing[i], config);
          }
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  for (auto& ind : fresh) cache.insert(std::move(*ind));

  std::vector<Individual> out;
  out.reserve(ids.size());
  for (const Cpid& id : ids) {
    const Individual* ind = cache.find(id);
    assert(ind != nullptr);
    out.push_back(*ind);
  }
  hits_out = hits;
  return out;
}

std::int64_t best_f1(const std::vector<Individual>& population) {
  std::int64_t best = 0;
  for (const Individual& ind : population) best = std::max(best, ind.f1_num);
  return best;
}

}  // namespace

Individual evaluate(const Permutation& p, const SearchConfig& config,
                    EvalCache& cache) {
  const Cpid id(p);
  if (const Individual* hit = cache.find(id)) return *hit;
  Individual ind = compute_individual(id, config);
  cache.insert(ind);
  return ind;
}

std::vector<Individual> elitism_select(std::vector<Individual> candidates, int m) {
  if (candidates.empty()) {
    throw std::invalid_argument("elitism needs a non-empty candidate list");
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Individual& a, const Individual& b) {
                     if (a.f1_num != b.f1_num) return a.f1_num > b.f1_num;
                     return a.id < b.id;
                   });
  if (static_cast<int>(candidates.size()) > m) {
    candidates.erase(candidates.begin() + m, candidates.end());
  }
  return candidates;
}

Part1Result run_part1(const SearchConfig& config, Rng& rng, EvalCache& cache,
                      std::vector<GenerationLogRow>& log) {
  config.validate();

  std::vector<Cpid> pop_ids;
  pop_ids.reserve(static_cast<std::size_t>(config.m));
  for (int i = 0; i < config.m; ++i) {
    pop_ids.emplace_back(random_permutation(config.n, rng));
  }

  for (std::int64_t g = 0;; ++g) {
    std::int64_t hits = 0;
    std::vector<Individual> population =
        evaluate_batch(pop_ids, config, cache, hits);

    Part1Result result;
    result.population = std::move(population);
    result.generations = g;
    for (const Individual& ind : result.population) {
      if (ind.generates_gbpo()) {
        result.found = true;
        result.ep.add(ArchiveEntry{ind.id, *ind.gbpo_period, ind.f1_num, g, 1,
                                   config.seed});
      }
    }
    log.push_back(GenerationLogRow{1, g, best_f1(result.population),
                                   static_cast<std::int64_t>(result.ep.size()),
                                   hits});
    if (result.found || g == config.g_m1) return result;

    for (Cpid& id : pop_ids) id = Cpid(mutate(id.perm(), rng));
  }
}

ExternalPopulation run_part2(const Part1Result& found, const SearchConfig& config,
                             Rng& rng, EvalCache& cache,
                             std::vector<GenerationLogRow>& log) {
  if (!found.found || found.ep.empty()) {
    throw std::invalid_argument("part 2 requires a part-1 discovery");
  }

  ExternalPopulation ep = found.ep;
  std::vector<Individual> population = found.population;

  for (std::int64_t g = 0; g < config.g_max; ++g) {
    assert(static_cast<int>(population.size()) == config.m);

    // P_e: the whole archive, or m_e members sampled without replacement.
    std::vector<Cpid> parents;
    parents.reserve(population.size() + ep.size());
    for (const Individual& ind : population) parents.push_back(ind.id);
    if (static_cast<int>(ep.size()) <= config.m_e) {
      for (const ArchiveEntry& e : ep.entries()) parents.push_back(e.id);
    } else {
      std::vector<std::size_t> idx(ep.size());
      std::iota(idx.begin(), idx.end(), 0);
      for (int i = 0; i < config.m_e; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(rng.below(idx.size() - static_cast<std::size_t>(i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        parents.push_back(ep.entries()[idx[static_cast<std::size_t>(i)]].id);
      }
    }

    std::vector<Cpid> offspring;
    offspring.reserve(parents.size());
    for (const Cpid& parent : parents) {
      offspring.emplace_back(mutate(parent.perm(), rng));
    }

    std::int64_t hits = 0;
    std::vector<Individual> candidates =
        evaluate_batch(offspring, config, cache, hits);
    for (const Individual& ind : candidates) {
      if (ind.generates_gbpo()) {
        ep.add(ArchiveEntry{ind.id, *ind.gbpo_period, ind.f1_num, g, 2,
                            config.seed});
      }
    }
    log.push_back(GenerationLogRow{2, g, best_f1(candidates),
                                   static_cast<std::int64_t>(ep.size()), hits});

    population = elitism_select(std::move(candidates), config.m);
  }
  return ep;
}

SearchResult run_search(const SearchConfig& config) {
  config.validate();
  Rng rng(config.seed);
  EvalCache cache;

  SearchResult result;
  result.config = config;
  const Part1Result part1 = run_part1(config, rng, cache, result.log);
  result.part1_found = part1.found;
  result.part1_generations = part1.generations;
  if (part1.found) {
    result.ep = run_part2(part1, config, rng, cache, result.log);
  } else {
    result.ep = part1.ep;
  }
  return result;
}

}  // namespace pbnn
