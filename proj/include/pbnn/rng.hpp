#pragma once

#include <cstdint>
#include <random>

namespace pbnn {

// Seedable generator with a stable name and stable draw semantics: bounded
// draws use rejection sampling on raw mt19937_64 words, so identical seeds
// replay identically on every platform and standard library.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pbnn
