#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbnn/net.hpp"

namespace pbnn {

// Physical ceiling for exhaustive sweeps; the successor table alone is
// 4 * 2^n bytes, so anything above this is out of desk-scale reach.
inline constexpr int kMaxExhaustiveDimension = 30;

struct AnalyzeOptions {
  // Refuse exhaustive analysis for n above this (clamped to the physical
  // ceiling). Deliberately conservative so default runs stay interactive.
  int max_dimension = 24;
  // Orbits with period above this keep only period/min_state/basin; the
  // full point list is re-derivable by stepping from min_state.
  int orbit_states_cap = 1024;
};

// One cycle of the functional graph: `period` distinct periodic points plus
// the `basin_size` eventually-periodic points that drain into it.
struct Orbit {
  std::uint64_t min_state = 0;
  std::int64_t period = 0;
  std::int64_t basin_size = 0;
  bool contains_endpoint = false;
  std::vector<std::uint64_t> states;  // orbit order from min_state, may be empty
};

// (#periodic points + #eventually periodic points) of the orbit, i.e. the
// numerator of its stability score over the implied denominator 2^n.
inline std::int64_t f1_numerator(const Orbit& o) {
  return o.period + o.basin_size;
}

enum class StateKind { kPeriodic, kEventuallyPeriodic, kEndpoint };

struct StateClass {
  StateKind kind;
  int orbit_index;          // index into AttractorReport::orbits()
  std::int64_t transient;   // steps until the first periodic point; 0 for BPPs
};

// Full decomposition of the 2^n state space of one network: every state is
// attributed to exactly one orbit, either on its cycle or in its basin.
class AttractorReport {
 public:
  const Pbnn& net() const { return net_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }

  // Orbit with the largest score; ties prefer the smaller period, then the
  // smaller minimal state.
  int best_index() const { return best_index_; }
  const Orbit& best_orbit() const {
    return orbits_[static_cast<std::size_t>(best_index_)];
  }
  std::int64_t f1_best_num() const { return f1_numerator(best_orbit()); }

  // A globally stable orbit soaks up every state except the two endpoints:
  // period + basin_size = 2^n - 2 on an orbit that avoids the endpoints.
  std::optional<int> gbpo_index() const { return gbpo_index_; }
  bool is_gbpo() const { return gbpo_index_.has_value(); }
  std::optional<std::int64_t> gbpo_period() const;

  std::uint64_t state_count() const { return std::uint64_t{1} << net_.n(); }
  bool is_periodic(std::uint64_t bits) const {
    return (periodic_bits_[bits >> 6] >> (bits & 63)) & 1;
  }

  const BitStepper& stepper() const { return stepper_; }

  friend AttractorReport analyze(const Pbnn& net, const AnalyzeOptions& options);

 private:
  AttractorReport(Pbnn net, BitStepper stepper)
      : net_(std::move(net)), stepper_(std::move(stepper)) {}

  Pbnn net_;
  BitStepper stepper_;
  std::vector<Orbit> orbits_;  // sorted by min_state ascending
  int best_index_ = 0;
  std::optional<int> gbpo_index_;
  std::vector<std::uint64_t> periodic_bits_;
};

// Exhaustively decomposes the functional graph of `net`. Single pass with
// three-color labels and an explicit path stack; O(2^n) time and memory.
// Throws BoundError when n exceeds the configured exhaustive bound.
AttractorReport analyze(const Pbnn& net, const AnalyzeOptions& options = {});

const Orbit& best_orbit(const AttractorReport& report);
bool is_gbpo(const AttractorReport& report);

// Walks x forward to its orbit: periodic point, eventually periodic point
// (with its transient length), or one of the two endpoints.
StateClass classify_state(const BinaryState& x, const AttractorReport& report);

}  // namespace pbnn
