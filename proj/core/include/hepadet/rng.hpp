#pragma once

#include <cstdint>

namespace hepadet {

// Counter-based generator: every draw is a hash of (key, counter), and
// independent streams are derived by hashing the key with a stream id.
// Draws therefore depend only on the seed and the fork path, never on
// how many values some other stream consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Derives an independent stream. Forking with the same id twice yields
  // the same stream.
  Rng fork(std::uint64_t stream) const;
  Rng fork(const char* label) const;

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller.
  double normal();
  // Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Bernoulli with probability p.
  bool chance(double p);

 private:
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace hepadet
