#include "pbnn/permutation.hpp"

#include <algorithm>
#include <charconv>

namespace pbnn {

Permutation::Permutation(std::vector<int> ids) : ids_(std::move(ids)) {
  const int n = static_cast<int>(ids_.size());
  if (n < 3 || n > 64) {
    throw std::invalid_argument("permutation size " + std::to_string(n) +
                                " out of supported range 3..64");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int v = ids_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) {
      throw ParseError("permutation value " + std::to_string(v) +
                           " out of range 1.." + std::to_string(n) +
                           " at position " + std::to_string(i + 1),
                       static_cast<std::size_t>(i));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw ParseError("duplicate permutation value " + std::to_string(v) +
                           " at position " + std::to_string(i + 1),
                       static_cast<std::size_t>(i));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(ids));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> ids;
  std::size_t i = 0;
  std::size_t token_index = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw ParseError("invalid permutation token at position " +
                           std::to_string(token_index + 1),
                       i);
    }
    ids.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    ++token_index;
  }
  if (ids.empty()) throw ParseError("empty permutation", 0);
  return Permutation(std::move(ids));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids_[i]);
  }
  return out;
}

Permutation shift(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // 0-based: out[(i+1) mod n] = in[i] mod n + 1
    out[static_cast<std::size_t>((i + 1) % n)] = p.ids()[static_cast<std::size_t>(i)] % n + 1;
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> equivalence_class(const Permutation& p) {
  std::vector<Permutation> orbit;
  orbit.push_back(p);
  for (Permutation q = shift(p); q != p; q = shift(q)) {
    orbit.push_back(q);
  }
  return orbit;
}

Permutation canonicalize(const Permutation& p) {
  Permutation best = p;
  for (Permutation q = shift(p); q != p; q = shift(q)) {
    if (q < best) best = q;
  }
  return best;
}

bool is_canonical(const Permutation& p) { return canonicalize(p) == p; }

}  // namespace pbnn
