#pragma once

#include <cstdint>
#include <vector>

namespace vodplan {

// Intra-video access decay: the i-th GOP of a video with V views is
// expected to be watched V / i^alpha times (viewers drop off, so later
// GOPs are transcoded less often).
struct PowerLawParams {
  double alpha_gop = 0.1;
};

// Repository-level long-tail popularity. Raw draws come from
// Weibull(shape, scale); a video is a frequently-accessed video (FAV)
// when its raw draw exceeds fav_cutoff. Integer view counts are produced
// by scaling the raw draw:
//  - normalize_to_target_mean = true: divide by the empirical sample mean
//    so the realized average lands on target_mean_views for any shape
//    (the repository-synthesis behaviour);
//  - false: multiply by target_mean_views directly, keeping the shape's
//    natural mean ratio (the experiment harness needs this so totals stay
//    comparable across shapes).
struct WeibullParams {
  double shape = 1.0;
  double scale = 1.0;
  double target_mean_views = 1.99;
  double fav_cutoff = 1.6;
  bool normalize_to_target_mean = true;
};

void validate(const WeibullParams& params);

struct ViewAssignment {
  std::uint64_t views = 0;
  bool is_fav = false;

  bool operator==(const ViewAssignment&) const = default;
};

// Round half-up to a non-negative integer (2.5 -> 3, 1.5 -> 2).
std::uint64_t round_half_up(double value);

// Expected views of the GOP at `gop_index` for a video viewed
// `views_last_period` times. Kept real-valued: it scales expected costs.
double gop_views(std::uint64_t views_last_period, std::uint32_t gop_index,
                 const PowerLawParams& params);

// One (views, is_fav) pair per video; bit-reproducible for a fixed seed.
std::vector<ViewAssignment> sample_repository_views(std::size_t n_videos,
                                                    const WeibullParams& params,
                                                    std::uint64_t seed);

// FAV views are multiplied by `multiplier`, the rest divided by it, both
// rounded half-up. Flags are unchanged. Requires multiplier >= 1.
std::vector<ViewAssignment> apply_view_multiplier(std::vector<ViewAssignment> assignments,
                                                  double multiplier);

}  // namespace vodplan
