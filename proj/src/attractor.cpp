#include "pbnn/attractor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace pbnn {

namespace {

constexpr std::int32_t kWhite = -1;
constexpr std::int32_t kGray = -2;

struct OrbitAccum {
  std::uint64_t min_state;
  std::int64_t period;
  std::int64_t basin;
};

}  // namespace

std::optional<std::int64_t> AttractorReport::gbpo_period() const {
  if (!gbpo_index_) return std::nullopt;
  return orbits_[static_cast<std::size_t>(*gbpo_index_)].period;
}

AttractorReport analyze(const Pbnn& net, const AnalyzeOptions& options) {
  const int n = net.n();
  const int bound = std::min(options.max_dimension, kMaxExhaustiveDimension);
  if (n > bound) {
    throw BoundError("exhaustive analysis refused: n=" + std::to_string(n) +
                     " exceeds the bound " + std::to_string(bound) +
                     " (2^n states; raise max_dimension to override up to " +
                     std::to_string(kMaxExhaustiveDimension) + ")");
  }

  const std::uint64_t size = std::uint64_t{1} << n;
  BitStepper stepper(net);

  std::vector<std::uint32_t> succ(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    succ[s] = static_cast<std::uint32_t>(stepper(s));
  }

  std::vector<std::int32_t> label(size, kWhite);
  std::vector<std::uint64_t> periodic_bits((size + 63) / 64, 0);
  std::vector<OrbitAccum> accums;
  std::vector<std::uint32_t> path;

  for (std::uint64_t s = 0; s < size; ++s) {
    if (label[s] != kWhite) continue;
    path.clear();
    std::uint32_t x = static_cast<std::uint32_t>(s);
    while (label[x] == kWhite) {
      label[x] = kGray;
      path.push_back(x);
      x = succ[x];
    }
    std::int32_t oid;
    if (label[x] == kGray) {
      // Closed a fresh cycle; walk it once to record the orbit.
      oid = static_cast<std::int32_t>(accums.size());
      OrbitAccum acc{x, 0, 0};
      std::uint32_t z = x;
      do {
        label[z] = oid;
        periodic_bits[z >> 6] |= std::uint64_t{1} << (z & 63);
        acc.min_state = std::min<std::uint64_t>(acc.min_state, z);
        ++acc.period;
        z = succ[z];
      } while (z != x);
      accums.push_back(acc);
    } else {
      oid = label[x];  // path drains into an already-known orbit
    }
    std::int64_t epps = 0;
    for (std::uint32_t v : path) {
      if (label[v] == kGray) {
        label[v] = oid;
        ++epps;
      }
    }
    accums[static_cast<std::size_t>(oid)].basin += epps;
  }

  // Endpoints always map among themselves, so both are periodic.
  const std::uint64_t plus = low_mask(n);
  assert((periodic_bits[0] & 1) != 0);
  assert(((periodic_bits[plus >> 6] >> (plus & 63)) & 1) != 0);
  const std::int32_t minus_oid = label[0];
  const std::int32_t plus_oid = label[plus];

  AttractorReport report(net, std::move(stepper));
  report.periodic_bits_ = std::move(periodic_bits);
  report.orbits_.reserve(accums.size());

  std::int64_t covered = 0;
  for (std::size_t oid = 0; oid < accums.size(); ++oid) {
    const OrbitAccum& acc = accums[oid];
    Orbit orbit;
    orbit.min_state = acc.min_state;
    orbit.period = acc.period;
    orbit.basin_size = acc.basin;
    orbit.contains_endpoint = (static_cast<std::int32_t>(oid) == minus_oid ||
                               static_cast<std::int32_t>(oid) == plus_oid);
    if (acc.period <= options.orbit_states_cap) {
      orbit.states.reserve(static_cast<std::size_t>(acc.period));
      std::uint64_t z = acc.min_state;
      do {
        orbit.states.push_back(z);
        z = succ[z];
      } while (z != acc.min_state);
    }
    covered += acc.period + acc.basin;
    report.orbits_.push_back(std::move(orbit));
  }
  if (covered != static_cast<std::int64_t>(size)) {
    throw std::logic_error("attractor decomposition does not partition the state space");
  }

  std::sort(report.orbits_.begin(), report.orbits_.end(),
            [](const Orbit& a, const Orbit& b) { return a.min_state < b.min_state; });

  int best = 0;
  for (int i = 1; i < static_cast<int>(report.orbits_.size()); ++i) {
    const Orbit& cand = report.orbits_[static_cast<std::size_t>(i)];
    const Orbit& cur = report.orbits_[static_cast<std::size_t>(best)];
    const std::int64_t fc = f1_numerator(cand);
    const std::int64_t fb = f1_numerator(cur);
    if (fc > fb || (fc == fb && (cand.period < cur.period ||
                                 (cand.period == cur.period &&
                                  cand.min_state < cur.min_state)))) {
      best = i;
    }
  }
  report.best_index_ = best;

  const std::int64_t gbpo_num = static_cast<std::int64_t>(size) - 2;
  for (int i = 0; i < static_cast<int>(report.orbits_.size()); ++i) {
    const Orbit& o = report.orbits_[static_cast<std::size_t>(i)];
    if (!o.contains_endpoint && f1_numerator(o) == gbpo_num) {
      report.gbpo_index_ = i;
      break;
    }
  }

  return report;
}

const Orbit& best_orbit(const AttractorReport& report) {
  return report.best_orbit();
}

bool is_gbpo(const AttractorReport& report) { return report.is_gbpo(); }

StateClass classify_state(const BinaryState& x, const AttractorReport& report) {
  if (x.n() != report.net().n()) {
    throw std::invalid_argument("state dimension does not match the report");
  }

  const auto orbit_index_of = [&report](std::uint64_t on_cycle) {
    // Identify the orbit by its minimal member, then look it up in the
    // min_state-sorted orbit list.
    std::uint64_t min_state = on_cycle;
    for (std::uint64_t z = report.stepper()(on_cycle); z != on_cycle;
         z = report.stepper()(z)) {
      min_state = std::min(min_state, z);
    }
    const auto& orbits = report.orbits();
    const auto it = std::lower_bound(
        orbits.begin(), orbits.end(), min_state,
        [](const Orbit& o, std::uint64_t v) { return o.min_state < v; });
    assert(it != orbits.end() && it->min_state == min_state);
    return static_cast<int>(it - orbits.begin());
  };

  if (x.is_endpoint()) {
    return StateClass{StateKind::kEndpoint, orbit_index_of(x.bits()), 0};
  }

  std::uint64_t bits = x.bits();
  std::int64_t transient = 0;
  while (!report.is_periodic(bits)) {
    bits = report.stepper()(bits);
    ++transient;
  }
  return StateClass{
      transient == 0 ? StateKind::kPeriodic : StateKind::kEventuallyPeriodic,
      orbit_index_of(bits), transient};
}

}  // namespace pbnn
