#ifndef PACT_RNG_HPP
#define PACT_RNG_HPP

#include <cstdint>

namespace pact {

// splitmix64. Self-contained so that seeded runs are reproducible across
// platforms and standard library versions.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() & 1u; }
};

}  // namespace pact

#endif
