#include "pbnn/net.hpp"

#include <stdexcept>

namespace pbnn {

Pbnn::Pbnn(int n, int cn, Permutation sigma)
    : n_(n), cn_(cn), sigma_(std::move(sigma)) {
  check_dimension(n);
  check_connection_number(cn);
  if (sigma_.size() != n) {
    throw std::invalid_argument("permutation size " +
                                std::to_string(sigma_.size()) +
                                " does not match dimension " + std::to_string(n));
  }
}

BinaryState hidden_layer(const BinaryState& x, int cn) {
  return BinaryState(x.n(), hidden_bits(x.bits(), x.n(), truth_table(cn)));
}

BinaryState hidden_layer_direct(const BinaryState& x, int cn) {
  const WeightTriple w = weights_for_cn(cn);
  const int n = x.n();
  std::uint64_t out = 0;
  for (int i = 1; i <= n; ++i) {
    const int left = x.component(i == 1 ? n : i - 1);   // x_0 = x_n
    const int mid = x.component(i);
    const int right = x.component(i == n ? 1 : i + 1);  // x_{n+1} = x_1
    const int sum = w.wa * left + w.wb * mid + w.wc * right;
    if (sum >= 0) out |= std::uint64_t{1} << (i - 1);
  }
  return BinaryState(n, out);
}

namespace {

BinaryState apply_sigma(const BinaryState& y, const Permutation& sigma) {
  const int n = y.n();
  std::uint64_t out = 0;
  for (int i = 1; i <= n; ++i) {
    out |= static_cast<std::uint64_t>((y.bits() >> (sigma(i) - 1)) & 1)
           << (i - 1);
  }
  return BinaryState(n, out);
}

void check_step_dimension(const BinaryState& x, const Pbnn& net) {
  if (x.n() != net.n()) {
    throw std::invalid_argument("state dimension " + std::to_string(x.n()) +
                                " does not match network dimension " +
                                std::to_string(net.n()));
  }
}

}  // namespace

BinaryState step(const BinaryState& x, const Pbnn& net) {
  check_step_dimension(x, net);
  return apply_sigma(hidden_layer(x, net.cn()), net.sigma());
}

BinaryState step_direct(const BinaryState& x, const Pbnn& net) {
  check_step_dimension(x, net);
  return apply_sigma(hidden_layer_direct(x, net.cn()), net.sigma());
}

std::vector<BinaryState> trajectory(const BinaryState& x0, const Pbnn& net,
                                    std::int64_t t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  check_step_dimension(x0, net);
  std::vector<BinaryState> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  out.push_back(x0);
  const BitStepper stepper(net);
  std::uint64_t bits = x0.bits();
  for (std::int64_t t = 0; t < t_max; ++t) {
    bits = stepper(bits);
    out.emplace_back(net.n(), bits);
  }
  return out;
}

BitStepper::BitStepper(const Pbnn& net)
    : n_(net.n()),
      blocks_((net.n() + 7) / 8),
      table_(truth_table(net.cn())),
      gather_(static_cast<std::size_t>(blocks_)) {
  // Output bit i-1 reads hidden bit sigma(i)-1, so hidden bit k lands at
  // output position sigma^{-1}(k+1)-1.
  std::vector<int> out_pos(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    out_pos[static_cast<std::size_t>(net.sigma()(i) - 1)] = i - 1;
  }
  for (int b = 0; b < blocks_; ++b) {
    auto& table = gather_[static_cast<std::size_t>(b)];
    table.fill(0);
    for (int v = 1; v < 256; ++v) {
      std::uint64_t scattered = 0;
      for (int j = 0; j < 8; ++j) {
        const int src = 8 * b + j;
        if (src >= n_ || !((v >> j) & 1)) continue;
        scattered |= std::uint64_t{1} << out_pos[static_cast<std::size_t>(src)];
      }
      table[static_cast<std::size_t>(v)] = scattered;
    }
  }
}

}  // namespace pbnn
