#include "gibbsdice/random.hpp"

#include <algorithm>
#include <cmath>

namespace gibbsdice {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) {
  const std::uint64_t a = mix64(master_seed);
  const std::uint64_t b = mix64(a ^ mix64(stream_id + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  engine_.seed(seq);
}

double RandomStream::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

double RandomStream::normal(double mean, double stddev) {
  if (stddev == 0.0) return mean;
  return std::normal_distribution<double>(mean, stddev)(engine_);
}

std::uint64_t RandomStream::binomial(std::uint64_t trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("binomial probability outside [0, 1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  return std::binomial_distribution<std::uint64_t>(trials, p)(engine_);
}

std::uint64_t simulate_tosses(double p, std::uint64_t tosses, RandomStream& stream) {
  return stream.binomial(tosses, p);
}

std::vector<std::uint64_t> simulate_tosses(const ProbabilityVector& p, std::uint64_t tosses,
                                           RandomStream& stream) {
  // Sequential conditional binomials.
  std::vector<std::uint64_t> counts(p.size(), 0);
  std::uint64_t remaining = tosses;
  double mass_left = 1.0;
  for (std::size_t i = 0; i + 1 < p.size() && remaining > 0; ++i) {
    const double q = mass_left > 0.0 ? std::clamp(p[i] / mass_left, 0.0, 1.0) : 1.0;
    counts[i] = stream.binomial(remaining, q);
    remaining -= counts[i];
    mass_left -= p[i];
  }
  counts.back() += remaining;
  return counts;
}

}  // namespace gibbsdice
