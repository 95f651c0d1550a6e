#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vodplan/access_model.hpp"
#include "vodplan/cost_engine.hpp"
#include "vodplan/pricing.hpp"
#include "vodplan/video_model.hpp"

namespace vodplan {

enum class PlanKind { FullyPre, FullyRe, Partial };

std::string_view to_string(PlanKind kind);
PlanKind plan_kind_from_string(std::string_view token);

// Per-video outcome: which GOP prefix is stored and which suffix is
// re-transcoded on demand. gop_threshold is the first GOP whose cost
// ratio exceeds one (present iff kind == Partial, in which case
// 2 <= gop_threshold <= m; GOPs 1..threshold-1 are stored).
struct TranscodingPlan {
  std::string video_id;
  PlanKind kind = PlanKind::FullyRe;
  std::optional<std::uint32_t> gop_threshold;
  CostBreakdown projected_cost;  // under the view model, CDN excluded
  double stored_mb = 0.0;

  bool operator==(const TranscodingPlan&) const = default;
};

// Whole-video rule: a video with no views in the last period is left for
// on-demand transcoding; otherwise it is stored outright when
// storage / (V * transcode) <= 1, and handed to the partial scan when the
// ratio exceeds one.
TranscodingPlan decide_video(const VideoMeta& video, std::uint64_t views,
                             const PriceBook& prices, const PowerLawParams& power_law,
                             double period_months = 1.0);
TranscodingPlan decide_video(const VideoMeta& video, const PriceBook& prices,
                             const PowerLawParams& power_law, double period_months = 1.0);

// GOP scan: walks GOPs in order, stops at the first cost ratio > 1 and
// stores everything before it. No crossing -> store the whole video;
// crossing at the first GOP -> store nothing.
TranscodingPlan decide_partial(const VideoMeta& video, std::uint64_t views,
                               const PriceBook& prices, const PowerLawParams& power_law,
                               double period_months = 1.0);
TranscodingPlan decide_partial(const VideoMeta& video, const PriceBook& prices,
                               const PowerLawParams& power_law, double period_months = 1.0);

// Expected per-period cost of a plan: storage for the stored prefix,
// expected views times per-run cost for the re-transcoded suffix, and,
// when include_cdn is set, the delivery surcharge on stored gigabytes.
// Throws if the plan does not belong to the video.
CostBreakdown plan_cost(const VideoMeta& video, const TranscodingPlan& plan,
                        std::uint64_t views, const PriceBook& prices,
                        const PowerLawParams& power_law, bool include_cdn,
                        double period_months = 1.0);
CostBreakdown plan_cost(const VideoMeta& video, const TranscodingPlan& plan,
                        const PriceBook& prices, const PowerLawParams& power_law,
                        bool include_cdn, double period_months = 1.0);

// Brute-force verification oracle: picks the cheaper of storing or
// re-transcoding independently for every GOP. Its cost is a lower bound
// on any plan's model cost; it matches the threshold scan exactly when
// the cost-ratio sequence is monotone non-decreasing.
struct GopOracleResult {
  std::vector<bool> store_gop;  // store_gop[i-1] for GOP i
  double expected_cost = 0.0;
};

GopOracleResult oracle_per_gop(const VideoMeta& video, std::uint64_t views,
                               const PriceBook& prices, const PowerLawParams& power_law,
                               double period_months = 1.0);

// One plan per video, in input order. jobs == 0 uses the hardware
// parallelism; results do not depend on the job count.
std::vector<TranscodingPlan> decide_repository(const Repository& repo, const PriceBook& prices,
                                               const PowerLawParams& power_law,
                                               unsigned jobs = 0);

// CSV: video_id,kind,gop_threshold,stored_mb,storage_cost,transcode_cost,cdn_cost,total_cost
void save_plans_csv(std::span<const TranscodingPlan> plans, std::ostream& out);
void save_plans_csv(std::span<const TranscodingPlan> plans, const std::filesystem::path& file);

}  // namespace vodplan
