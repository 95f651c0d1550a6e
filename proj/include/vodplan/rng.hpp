#pragma once

#include <cstdint>
#include <random>

namespace vodplan {

// SplitMix64 step; used to derive decorrelated stream seeds from one
// master seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Seed for logical stream `stream` under `master`. Distinct streams give
// independent generators, so per-video or per-repetition draws can run in
// any order (or in parallel) without changing results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// mt19937_64 plus explicit transforms. The standard pins the engine's
// output bit-for-bit but not the distributions, so inverse-CDF and
// Box-Muller are done by hand to keep results identical everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53-bit resolution.
  double uniform01();

  double gaussian(double mean, double stddev);

  // Rejection sampling against [lo, hi]; keeps the Gaussian shape in the
  // interior instead of piling mass at the bounds.
  double truncated_gaussian(double mean, double stddev, double lo, double hi);

  double weibull(double shape, double scale);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vodplan
