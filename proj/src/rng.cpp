#include "vodplan/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vodplan {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ (stream * 0xD1342543DE82EF95ull + 1);
  return splitmix64(state);
}

double Sampler::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian(double mean, double stddev) {
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log1p(-u1));
  const double z = radius * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

double Sampler::truncated_gaussian(double mean, double stddev, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("truncated_gaussian: lo > hi");
  if (stddev == 0.0) {
    if (mean < lo || mean > hi) {
      throw std::invalid_argument("truncated_gaussian: degenerate mean outside [lo, hi]");
    }
    return mean;
  }
  for (int attempt = 0; attempt < 100'000'000; ++attempt) {
    const double x = gaussian(mean, stddev);
    if (x >= lo && x <= hi) return x;
  }
  throw std::runtime_error("truncated_gaussian: acceptance region too small");
}

double Sampler::weibull(double shape, double scale) {
  const double u = uniform01();
  return scale * std::pow(-std::log1p(-u), 1.0 / shape);
}

}  // namespace vodplan
