#pragma once

#include <cstdint>

namespace cycount {

// xoshiro256** seeded through splitmix64. Self-contained so that seeded runs
// are reproducible across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform in [0, 1), 53 random bits.
  double uniform();

  // Uniform in [0, bound); bound must be positive.
  int uniform_int(int bound);

  bool bernoulli(double p);

  // Independent child stream. Pure function of (seed, stream), so the result
  // does not depend on how much of this generator has been consumed.
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace cycount
