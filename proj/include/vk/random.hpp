#pragma once

#include <cstdint>
#include <random>

namespace vk {

// Seeded generator with a platform-independent bounded draw.  std::mt19937_64
// output is pinned by the standard; the rejection loop below avoids
// uniform_int_distribution, whose mapping differs between standard libraries,
// so a fixed seed reproduces byte-identical results everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return draw % n;
  }

  bool coin() { return (next() & 1) != 0; }
  int sign() { return coin() ? +1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vk
