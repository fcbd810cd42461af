#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "naive_reference.hpp"
#include "pbnn/attractor.hpp"
#include "pbnn/net.hpp"
#include "pbnn/permutation.hpp"

using namespace pbnn;

namespace {

Permutation random_perm(int n, std::mt19937_64& gen) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(ids.begin(), ids.end(), gen);
  return Permutation(ids);
}

}  // namespace

TEST_CASE("shift walks the documented 3-cycles") {
  const Permutation p132 = Permutation::parse("1 3 2");
  const Permutation p321 = Permutation::parse("3 2 1");
  const Permutation p213 = Permutation::parse("2 1 3");
  CHECK(shift(p132) == p321);
  CHECK(shift(p321) == p213);
  CHECK(shift(p213) == p132);

  const Permutation p231 = Permutation::parse("2 3 1");
  CHECK(shift(p231) == p231);
}

TEST_CASE("identity is a shift fixed point") {
  for (int n : {3, 5, 8}) {
    const Permutation id = Permutation::identity(n);
    CHECK(shift(id) == id);
    CHECK(equivalence_class(id).size() == 1);
  }
}

TEST_CASE("shift order divides n") {
  std::mt19937_64 gen(11);
  for (int n : {5, 7, 11, 12, 13, 17}) {
    for (int rep = 0; rep < 200; ++rep) {
      const Permutation p = random_perm(n, gen);
      Permutation q = p;
      for (int k = 0; k < n; ++k) q = shift(q);
      CHECK(q == p);
      const auto cls = equivalence_class(p);
      CHECK(n % static_cast<int>(cls.size()) == 0);
      CHECK(std::count(cls.begin(), cls.end(), p) == 1);
    }
  }
}

TEST_CASE("canonical form equals the class minimum") {
  CHECK(canonicalize(Permutation::parse("3 2 1")) == Permutation::parse("1 3 2"));
  CHECK(canonicalize(Permutation::parse("2 3 1")) == Permutation::parse("2 3 1"));
  CHECK(canonicalize(Permutation::parse("2 1 3")) == Permutation::parse("1 3 2"));

  std::mt19937_64 gen(12);
  for (int n : {3, 4, 5, 8, 11, 17}) {
    for (int rep = 0; rep < 200; ++rep) {
      const Permutation p = random_perm(n, gen);
      const Permutation c = canonicalize(p);
      CHECK(c.ids() == naive::min_shift_class(p.ids()));
      CHECK(canonicalize(c) == c);
      CHECK(is_canonical(c));
      CHECK(Cpid(p).perm() == c);
      // Explicit enumeration agrees.
      const auto cls = equivalence_class(p);
      CHECK(c == *std::min_element(cls.begin(), cls.end()));
      CHECK(is_canonical(p) == (p == c));
    }
  }
}

TEST_CASE("every permutation of S4 canonicalizes into its class") {
  std::vector<int> ids{1, 2, 3, 4};
  std::map<std::vector<int>, int> class_sizes;
  int count = 0;
  do {
    const Permutation p{ids};
    class_sizes[canonicalize(p).ids()] += 1;
    ++count;
  } while (std::next_permutation(ids.begin(), ids.end()));
  CHECK(count == 24);
  int total = 0;
  for (const auto& [cpid, size] : class_sizes) {
    CHECK(is_canonical(Permutation(cpid)));
    CHECK(size == static_cast<int>(equivalence_class(Permutation(cpid)).size()));
    total += size;
  }
  CHECK(total == 24);
  CHECK(class_sizes.size() == 10);
}

TEST_CASE("shifted wirings are conjugate dynamics") {
  // F under R(sigma) applied to the rotated state equals the rotation of
  // F under sigma: the two networks relabel the same dynamics.
  std::mt19937_64 gen(13);
  for (int n : {3, 5, 7, 10, 17}) {
    for (int cn = 0; cn < 8; ++cn) {
      const Permutation p = random_perm(n, gen);
      const Pbnn net(n, cn, p);
      const Pbnn shifted(n, cn, shift(p));
      for (int rep = 0; rep < 50; ++rep) {
        const std::uint64_t bits = gen() & low_mask(n);
        const std::uint64_t lhs =
            step(BinaryState(n, rotl1(bits, n)), shifted).bits();
        const std::uint64_t rhs = rotl1(step(BinaryState(n, bits), net).bits(), n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("shift-equivalent wirings share their orbit structure") {
  std::mt19937_64 gen(14);
  for (int n : {5, 7, 9}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Permutation p = random_perm(n, gen);
      const int cn = static_cast<int>(gen() % 8);
      const auto ra = analyze(Pbnn(n, cn, p));
      const auto rb = analyze(Pbnn(n, cn, shift(p)));
      auto signature = [](const AttractorReport& r) {
        std::vector<std::pair<std::int64_t, std::int64_t>> sig;
        for (const Orbit& o : r.orbits()) sig.emplace_back(o.period, o.basin_size);
        std::sort(sig.begin(), sig.end());
        return sig;
      };
      CHECK(signature(ra) == signature(rb));
    }
  }
}
