#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "naive_reference.hpp"
#include "pbnn/attractor.hpp"

using namespace pbnn;

namespace {

Permutation random_perm(int n, std::mt19937_64& gen) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(ids.begin(), ids.end(), gen);
  return Permutation(ids);
}

void check_against_reference(const Pbnn& net) {
  const AttractorReport report = analyze(net);
  const auto ref = naive::decompose(net.n(), net.cn(), net.sigma().ids());
  REQUIRE(report.orbits().size() == ref.size());
  std::size_t k = 0;
  for (const auto& [min_state, o] : ref) {
    const Orbit& got = report.orbits()[k++];
    CHECK(got.min_state == min_state);
    CHECK(got.period == static_cast<std::int64_t>(o.cycle.size()));
    CHECK(got.basin_size == o.basin);
    // Orbit membership and order match when states were kept.
    if (!got.states.empty()) {
      REQUIRE(got.states.size() == o.cycle.size());
      for (std::size_t i = 0; i < o.cycle.size(); ++i) {
        CHECK(got.states[i] == naive::pack(o.cycle[i]));
      }
    }
    bool endpoint = false;
    for (const auto& s : o.cycle) {
      const auto bits = naive::pack(s);
      if (bits == 0 || bits == low_mask(net.n())) endpoint = true;
    }
    CHECK(got.contains_endpoint == endpoint);
  }
}

}  // namespace

TEST_CASE("decomposition matches the naive reference") {
  std::mt19937_64 gen(21);
  for (int n : {5, 7, 9}) {
    for (int cn = 0; cn < 8; ++cn) {
      for (int rep = 0; rep < 5; ++rep) {
        check_against_reference(Pbnn(n, cn, random_perm(n, gen)));
      }
    }
  }
}

TEST_CASE("seven-neuron identity wiring, full frozen table") {
  const AttractorReport r = analyze(Pbnn(7, 1, Permutation::identity(7)));
  struct Row {
    std::uint64_t min_state;
    std::int64_t period, basin;
    bool endpoint;
  };
  const std::vector<Row> expected = {
      {0x00, 2, 0, true},  {0x03, 14, 14, false}, {0x07, 14, 0, false},
      {0x13, 7, 28, false}, {0x15, 7, 0, false},  {0x1b, 7, 28, false},
      {0x2b, 7, 0, false},
  };
  REQUIRE(r.orbits().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(r.orbits()[i].min_state == expected[i].min_state);
    CHECK(r.orbits()[i].period == expected[i].period);
    CHECK(r.orbits()[i].basin_size == expected[i].basin);
    CHECK(r.orbits()[i].contains_endpoint == expected[i].endpoint);
  }
  CHECK(r.f1_best_num() == 35);
  CHECK(r.best_orbit().min_state == 0x13);  // f1 tie vs 0x1b, smaller state wins
  CHECK_FALSE(r.is_gbpo());
  CHECK_FALSE(r.gbpo_period().has_value());
}

TEST_CASE("seven-neuron interleaved wiring is globally stable") {
  const AttractorReport r = analyze(Pbnn(7, 1, Permutation::parse("1 5 2 6 3 7 4")));
  REQUIRE(r.orbits().size() == 2);
  CHECK(r.is_gbpo());
  CHECK(r.gbpo_period() == 42);
  CHECK(r.f1_best_num() == 126);
  const Orbit& g = r.orbits()[static_cast<std::size_t>(*r.gbpo_index())];
  CHECK(g.period == 42);
  CHECK(g.basin_size == 84);
  CHECK_FALSE(g.contains_endpoint);
}

TEST_CASE("partition invariant on random networks") {
  std::mt19937_64 gen(22);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(gen() % 10);
    const int cn = static_cast<int>(gen() % 8);
    const AttractorReport r = analyze(Pbnn(n, cn, random_perm(n, gen)));
    std::int64_t covered = 0;
    for (const Orbit& o : r.orbits()) covered += f1_numerator(o);
    CHECK(covered == static_cast<std::int64_t>(r.state_count()));
    CHECK(std::is_sorted(r.orbits().begin(), r.orbits().end(),
                         [](const Orbit& a, const Orbit& b) {
                           return a.min_state < b.min_state;
                         }));
  }
}

TEST_CASE("state classification walks into the right orbit") {
  const AttractorReport r = analyze(Pbnn(7, 1, Permutation::identity(7)));
  // Endpoints classify as endpoints.
  CHECK(classify_state(BinaryState::all_minus(7), r).kind == StateKind::kEndpoint);
  CHECK(classify_state(BinaryState::all_plus(7), r).kind == StateKind::kEndpoint);
  // Orbit minima are periodic with zero transient.
  for (int i = 0; i < static_cast<int>(r.orbits().size()); ++i) {
    const Orbit& o = r.orbits()[static_cast<std::size_t>(i)];
    if (o.contains_endpoint) continue;
    const StateClass c = classify_state(BinaryState(7, o.min_state), r);
    CHECK(c.kind == StateKind::kPeriodic);
    CHECK(c.orbit_index == i);
    CHECK(c.transient == 0);
  }
  // Every state: stepping `transient` times lands on its orbit's cycle.
  const BitStepper& fwd = r.stepper();
  for (std::uint64_t bits = 0; bits < r.state_count(); ++bits) {
    const StateClass c = classify_state(BinaryState(7, bits), r);
    std::uint64_t cur = bits;
    for (std::int64_t t = 0; t < c.transient; ++t) {
      CHECK_FALSE(r.is_periodic(cur));
      cur = fwd(cur);
    }
    CHECK(r.is_periodic(cur));
    if (c.kind == StateKind::kEventuallyPeriodic) CHECK(c.transient > 0);
  }
}

TEST_CASE("orbit state lists honor the retention cap") {
  AnalyzeOptions opts;
  opts.orbit_states_cap = 10;
  const AttractorReport r =
      analyze(Pbnn(7, 1, Permutation::parse("1 5 2 6 3 7 4")), opts);
  for (const Orbit& o : r.orbits()) {
    if (o.period <= 10) {
      REQUIRE_FALSE(o.states.empty());
      CHECK(o.states.front() == o.min_state);
      CHECK(static_cast<std::int64_t>(o.states.size()) == o.period);
    } else {
      CHECK(o.states.empty());
    }
  }
}

TEST_CASE("exhaustive bound is enforced") {
  // The dimension alone triggers refusal, regardless of wiring.
  std::vector<int> ids(25);
  for (int i = 0; i < 25; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(analyze(Pbnn(25, 1, Permutation(ids))), BoundError);

  AnalyzeOptions opts;
  opts.max_dimension = 64;  // physical ceiling still applies
  std::vector<int> ids31(31);
  for (int i = 0; i < 31; ++i) ids31[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(analyze(Pbnn(31, 1, Permutation(ids31)), opts), BoundError);

  opts.max_dimension = 10;  // lowered bound refuses what defaults allow
  std::vector<int> ids12(12);
  for (int i = 0; i < 12; ++i) ids12[static_cast<std::size_t>(i)] = i + 1;
  CHECK_THROWS_AS(analyze(Pbnn(12, 1, Permutation(ids12)), opts), BoundError);
  CHECK_NOTHROW(analyze(Pbnn(12, 1, Permutation(ids12))));
}
