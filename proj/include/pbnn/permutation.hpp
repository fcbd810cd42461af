#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pbnn/errors.hpp"

namespace pbnn {

// A bijection sigma on {1..n}, stored as the identifier sequence
// (sigma(1), ..., sigma(n)). Printed as whitespace-separated 1-based
// integers, e.g. "1 5 2 6 3 7 4"; comma separators are accepted on input.
class Permutation {
 public:
  explicit Permutation(std::vector<int> ids);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(ids_.size()); }

  // sigma(i), 1-based.
  int operator()(int i) const { return ids_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& ids() const { return ids_; }

  std::string to_string() const;

  // Lexicographic order on the identifier sequence. This coincides with the
  // base-n numeric order on identifiers of equal length.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.ids_ <=> b.ids_;
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> ids_;
};

// Shift operator R: rotation-conjugation of the wiring. The result sigma'
// satisfies sigma'(i+1) = sigma(i) + 1 with values reduced to {1..n}
// (n+1 wraps to 1) and the index taken cyclically (sigma'(n+1) = sigma'(1)).
// R generates wirings whose dynamics are conjugate to the original.
Permutation shift(const Permutation& p);

// The orbit {p, R(p), R^2(p), ...} up to first repetition; its size
// divides the permutation size.
std::vector<Permutation> equivalence_class(const Permutation& p);

// The shift-equivalence class member that is minimal in base-n order.
Permutation canonicalize(const Permutation& p);

bool is_canonical(const Permutation& p);

// Canonical permutation identifier: a permutation certified to be the
// minimal member of its shift-equivalence class.
class Cpid {
 public:
  explicit Cpid(const Permutation& p) : perm_(canonicalize(p)) {}

  const Permutation& perm() const { return perm_; }

  friend std::strong_ordering operator<=>(const Cpid& a, const Cpid& b) {
    return a.perm_ <=> b.perm_;
  }
  friend bool operator==(const Cpid&, const Cpid&) = default;

 private:
  Permutation perm_;
};

}  // namespace pbnn
