#include "vodplan/access_model.hpp"

#include <cmath>
#include <stdexcept>

#include "vodplan/rng.hpp"

namespace vodplan {

void validate(const WeibullParams& params) {
  if (!(params.shape > 0.0)) throw std::invalid_argument("weibull: shape must be > 0");
  if (!(params.scale > 0.0)) throw std::invalid_argument("weibull: scale must be > 0");
  if (!(params.target_mean_views > 0.0)) {
    throw std::invalid_argument("weibull: target_mean_views must be > 0");
  }
  if (!(params.fav_cutoff > 0.0)) throw std::invalid_argument("weibull: fav_cutoff must be > 0");
}

std::uint64_t round_half_up(double value) {
  if (value <= 0.0) return 0;
  return static_cast<std::uint64_t>(std::floor(value + 0.5));
}

double gop_views(std::uint64_t views_last_period, std::uint32_t gop_index,
                 const PowerLawParams& params) {
  if (gop_index < 1) throw std::domain_error("gop_views: gop_index must be >= 1");
  if (params.alpha_gop < 0.0) throw std::invalid_argument("gop_views: alpha_gop must be >= 0");
  return static_cast<double>(views_last_period) /
         std::pow(static_cast<double>(gop_index), params.alpha_gop);
}

std::vector<ViewAssignment> sample_repository_views(std::size_t n_videos,
                                                    const WeibullParams& params,
                                                    std::uint64_t seed) {
  if (n_videos < 1) throw std::invalid_argument("sample_repository_views: n_videos must be >= 1");
  validate(params);

  Sampler sampler(seed);
  std::vector<double> raw(n_videos);
  double sum = 0.0;
  for (auto& x : raw) {
    x = sampler.weibull(params.shape, params.scale);
    sum += x;
  }
  const double mean = sum / static_cast<double>(n_videos);
  const double scale_factor = params.normalize_to_target_mean
                                  ? (mean > 0.0 ? params.target_mean_views / mean : 0.0)
                                  : params.target_mean_views;

  std::vector<ViewAssignment> out(n_videos);
  for (std::size_t i = 0; i < n_videos; ++i) {
    out[i].views = round_half_up(raw[i] * scale_factor);
    out[i].is_fav = raw[i] > params.fav_cutoff;
  }
  return out;
}

std::vector<ViewAssignment> apply_view_multiplier(std::vector<ViewAssignment> assignments,
                                                  double multiplier) {
  if (!(multiplier >= 1.0)) {
    throw std::domain_error("apply_view_multiplier: multiplier must be >= 1");
  }
  for (auto& a : assignments) {
    const double views = static_cast<double>(a.views);
    a.views = a.is_fav ? round_half_up(views * multiplier) : round_half_up(views / multiplier);
  }
  return assignments;
}

}  // namespace vodplan
