#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbnn/errors.hpp"

namespace pbnn {

// States live in {-1,+1}^n with 3 <= n <= 64 so one machine word holds a
// full state: bit i-1 encodes component x_i, bit value 1 <=> x_i = +1.
inline constexpr int kMinDimension = 3;
inline constexpr int kMaxDimension = 64;

inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Rotate the low n bits of x left/right by one position (ring indexing).
inline constexpr std::uint64_t rotl1(std::uint64_t x, int n) {
  return ((x << 1) | (x >> (n - 1))) & low_mask(n);
}

inline constexpr std::uint64_t rotr1(std::uint64_t x, int n) {
  return ((x >> 1) | (x << (n - 1))) & low_mask(n);
}

void check_dimension(int n);

class BinaryState {
 public:
  BinaryState(int n, std::uint64_t bits);

  static BinaryState all_minus(int n) { return BinaryState(n, 0); }
  static BinaryState all_plus(int n) { return BinaryState(n, low_mask(n)); }

  // components[i] is x_{i+1}, each value -1 or +1.
  static BinaryState from_components(std::span<const int> components);

  // Accepts a +/- string ("+--+") or a hex word ("0x2b", needs explicit n).
  static BinaryState parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  // 1-based component access, returns -1 or +1.
  int component(int i) const {
    return ((bits_ >> (i - 1)) & 1) ? +1 : -1;
  }

  std::vector<int> components() const;

  bool is_endpoint() const { return bits_ == 0 || bits_ == low_mask(n_); }

  // Index 1 leftmost: "+-+" means x_1=+1, x_2=-1, x_3=+1.
  std::string to_pm_string() const;
  std::string to_hex() const;

  friend bool operator==(const BinaryState&, const BinaryState&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

// Local connection weights (w_a, w_b, w_c), each -1 or +1, selected by the
// connection number cn in 0..7: bit 2 -> w_a, bit 1 -> w_b, bit 0 -> w_c,
// bit set <=> +1. E.g. cn=1 -> (-1,-1,+1), cn=7 -> (+1,+1,+1).
struct WeightTriple {
  int wa;
  int wb;
  int wc;

  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

void check_connection_number(int cn);
WeightTriple weights_for_cn(int cn);

// 8-bit neighborhood truth table. Bit k is the output for the neighborhood
// (x_{i-1}, x_i, x_{i+1}) whose encoding is k = 4*b(x_{i-1}) + 2*b(x_i) +
// b(x_{i+1}); it equals 1 iff sgn(w_a x_{i-1} + w_b x_i + w_c x_{i+1}) = +1.
// The weighted sum is always odd (+-1 or +-3), so sgn never sees 0.
std::uint8_t truth_table(int cn);

// Applies the truth table to every position of the packed state word at
// once, using the two ring rotations as the left/right neighbor lanes.
inline std::uint64_t hidden_bits(std::uint64_t bits, int n, std::uint8_t table) {
  const std::uint64_t m = low_mask(n);
  const std::uint64_t a = rotl1(bits, n);  // b(x_{i-1}) at lane i-1
  const std::uint64_t b = bits & m;
  const std::uint64_t c = rotr1(bits, n);  // b(x_{i+1}) at lane i-1
  std::uint64_t y = 0;
  for (int k = 0; k < 8; ++k) {
    if (!((table >> k) & 1)) continue;
    const std::uint64_t ta = (k & 4) ? a : ~a;
    const std::uint64_t tb = (k & 2) ? b : ~b;
    const std::uint64_t tc = (k & 1) ? c : ~c;
    y |= ta & tb & tc;
  }
  return y & m;
}

}  // namespace pbnn
