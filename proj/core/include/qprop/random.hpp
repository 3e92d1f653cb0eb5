#pragma once

#include <cstdint>
#include <random>

namespace qprop {

// Seeded deterministic random stream threaded explicitly through every
// stochastic operation. The uniform and normal transforms are implemented
// here rather than with <random> distributions so a given seed yields the
// same draws on every standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal draw (Box-Muller, one value per pair of uniforms).
  double normal();

  std::uint64_t next_u64() { return engine_(); }

  // Independent child stream for worker `index`; depends only on
  // (seed, index).
  RandomStream split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qprop
