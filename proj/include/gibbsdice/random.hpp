#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gibbsdice/model.hpp"

namespace gibbsdice {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// A seeded random stream. Streams with the same (master_seed, stream_id)
/// produce identical sequences; distinct ids give decorrelated sequences, so
/// work item k can own stream k no matter which thread runs it.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t master_seed, std::uint64_t stream_id = 0);

  double uniform();
  double normal(double mean, double stddev);
  std::uint64_t binomial(std::uint64_t trials, double p);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Number of square-face outcomes in `tosses` tosses with success
/// probability p.
std::uint64_t simulate_tosses(double p, std::uint64_t tosses, RandomStream& stream);

/// Multinomial outcome counts for `tosses` tosses of a die with face
/// probabilities p.
std::vector<std::uint64_t> simulate_tosses(const ProbabilityVector& p, std::uint64_t tosses,
                                           RandomStream& stream);

}  // namespace gibbsdice
