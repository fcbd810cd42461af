#include "pbnn/state.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace pbnn {

void check_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw std::invalid_argument("dimension n must be in [" +
                                std::to_string(kMinDimension) + ", " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
  }
}

void check_connection_number(int cn) {
  if (cn < 0 || cn > 7) {
    throw std::invalid_argument("connection number must be in [0, 7], got " +
                                std::to_string(cn));
  }
}

BinaryState::BinaryState(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_dimension(n);
  if (bits & ~low_mask(n)) {
    throw std::invalid_argument("state word has bits set above position n-1");
  }
}

BinaryState BinaryState::from_components(std::span<const int> components) {
  const int n = static_cast<int>(components.size());
  check_dimension(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (components[i] != 1 && components[i] != -1) {
      throw std::invalid_argument("state components must be -1 or +1");
    }
    if (components[i] == 1) bits |= std::uint64_t{1} << i;
  }
  return BinaryState(n, bits);
}

BinaryState BinaryState::parse(std::string_view text, int n) {
  if (text.empty()) throw ParseError("empty state string", 0);
  if (text.starts_with("0x") || text.starts_with("0X")) {
    if (n == 0) {
      throw ParseError("hex state needs an explicit dimension", 0);
    }
    std::uint64_t bits = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, bits, 16);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("invalid hex state literal",
                       static_cast<std::size_t>(ptr - text.data()));
    }
    if (bits & ~low_mask(n)) {
      throw ParseError("hex state has bits above position n-1", 2);
    }
    return BinaryState(n, bits);
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '-') {
      throw ParseError(std::string("invalid state character '") + text[i] +
                           "' (expected '+' or '-')",
                       i);
    }
  }
  const int len = static_cast<int>(text.size());
  if (n != 0 && n != len) {
    throw ParseError("state string length " + std::to_string(len) +
                         " does not match dimension " + std::to_string(n),
                     0);
  }
  check_dimension(len);
  return BinaryState(len, bits);
}

std::vector<int> BinaryState::components() const {
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) v[static_cast<std::size_t>(i - 1)] = component(i);
  return v;
}

std::string BinaryState::to_pm_string() const {
  std::string s(static_cast<std::size_t>(n_), '-');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '+';
  }
  return s;
}

std::string BinaryState::to_hex() const {
  char buf[2 + 16 + 1];
  char* p = buf + sizeof(buf);
  *--p = '\0';
  std::uint64_t v = bits_;
  do {
    *--p = "0123456789abcdef"[v & 0xf];
    v >>= 4;
  } while (v != 0);
  *--p = 'x';
  *--p = '0';
  return std::string(p);
}

WeightTriple weights_for_cn(int cn) {
  check_connection_number(cn);
  return WeightTriple{(cn & 4) ? +1 : -1, (cn & 2) ? +1 : -1,
                      (cn & 1) ? +1 : -1};
}

std::uint8_t truth_table(int cn) {
  const WeightTriple w = weights_for_cn(cn);
  std::uint8_t mask = 0;
  for (int k = 0; k < 8; ++k) {
    const int left = (k & 4) ? +1 : -1;
    const int mid = (k & 2) ? +1 : -1;
    const int right = (k & 1) ? +1 : -1;
    const int sum = w.wa * left + w.wb * mid + w.wc * right;
    assert(sum % 2 != 0);  // odd weights, odd fan-in: no ties
    if (sum >= 0) mask |= static_cast<std::uint8_t>(1u << k);
  }
  return mask;
}

}  // namespace pbnn
