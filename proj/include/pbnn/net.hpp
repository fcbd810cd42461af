#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pbnn/permutation.hpp"
#include "pbnn/state.hpp"

namespace pbnn {

// A permutation binary neural network: a ring of n binary neurons with one
// local weight triple shared by every position (selected by cn) and a global
// permutation sigma wiring the hidden layer back to the state,
//   x_i^{t+1} = y_{sigma(i)},  y_i = sgn(w_a x_{i-1} + w_b x_i + w_c x_{i+1}).
class Pbnn {
 public:
  Pbnn(int n, int cn, Permutation sigma);

  int n() const { return n_; }
  int cn() const { return cn_; }
  const Permutation& sigma() const { return sigma_; }

  friend bool operator==(const Pbnn&, const Pbnn&) = default;

 private:
  int n_;
  int cn_;
  Permutation sigma_;
};

// Hidden layer, bit-parallel path: the truth table applied to the state
// word and its two ring rotations.
BinaryState hidden_layer(const BinaryState& x, int cn);

// Hidden layer, direct path: per-component signum of the weighted sum.
// Kept deliberately separate from the bit-parallel path; the two are
// checked against each other exhaustively in the test suite.
BinaryState hidden_layer_direct(const BinaryState& x, int cn);

// One full step x -> F(x): hidden layer, then permutation wiring.
BinaryState step(const BinaryState& x, const Pbnn& net);
BinaryState step_direct(const BinaryState& x, const Pbnn& net);

// (x^0, x^1, ..., x^{t_max}).
std::vector<BinaryState> trajectory(const BinaryState& x0, const Pbnn& net,
                                    std::int64_t t_max);

// Word-level stepper for exhaustive sweeps. The permutation wiring is
// precompiled into byte-indexed scatter tables so one step costs the
// truth-table evaluation plus ceil(n/8) table lookups.
class BitStepper {
 public:
  explicit BitStepper(const Pbnn& net);

  std::uint64_t operator()(std::uint64_t bits) const {
    const std::uint64_t h = hidden_bits(bits, n_, table_);
    std::uint64_t out = 0;
    for (int b = 0; b < blocks_; ++b) {
      out |= gather_[static_cast<std::size_t>(b)][(h >> (8 * b)) & 0xff];
    }
    return out;
  }

  int n() const { return n_; }

 private:
  int n_;
  int blocks_;
  std::uint8_t table_;
  std::vector<std::array<std::uint64_t, 256>> gather_;
};

}  // namespace pbnn
