#include "vodplan/decision.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "vodplan/text.hpp"

namespace vodplan {

namespace {

double stored_prefix_mb(const VideoMeta& video, const TranscodingPlan& plan) {
  switch (plan.kind) {
    case PlanKind::FullyPre:
      return video_size_mb(video);
    case PlanKind::FullyRe:
      return 0.0;
    case PlanKind::Partial: {
      double total = 0.0;
      for (const auto& gop : video.gops) {
        if (gop.index < *plan.gop_threshold) total += gop.size_mb;
      }
      return total;
    }
  }
  return 0.0;
}

TranscodingPlan finalize_plan(TranscodingPlan plan, const VideoMeta& video, std::uint64_t views,
                              const PriceBook& prices, const PowerLawParams& power_law,
                              double period_months) {
  plan.stored_mb = stored_prefix_mb(video, plan);
  plan.projected_cost =
      plan_cost(video, plan, views, prices, power_law, /*include_cdn=*/false, period_months);
  return plan;
}

}  // namespace

std::string_view to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::FullyPre:
      return "FullyPre";
    case PlanKind::FullyRe:
      return "FullyRe";
    case PlanKind::Partial:
      return "Partial";
  }
  return "?";
}

PlanKind plan_kind_from_string(std::string_view token) {
  if (token == "FullyPre") return PlanKind::FullyPre;
  if (token == "FullyRe") return PlanKind::FullyRe;
  if (token == "Partial") return PlanKind::Partial;
  throw std::invalid_argument("unknown plan kind '" + std::string(token) + "'");
}

TranscodingPlan decide_video(const VideoMeta& video, std::uint64_t views, const PriceBook& prices,
                             const PowerLawParams& power_law, double period_months) {
  TranscodingPlan plan;
  plan.video_id = video.id;
  if (views == 0) {
    plan.kind = PlanKind::FullyRe;
    return finalize_plan(std::move(plan), video, views, prices, power_law, period_months);
  }
  const double whole_storage = storage_cost(video_size_mb(video), prices, period_months);
  const double whole_transcode = transcode_cost(video_transcode_seconds(video), prices);
  if (cost_ratio(whole_storage, whole_transcode, static_cast<double>(views)) <= 1.0) {
    plan.kind = PlanKind::FullyPre;
    return finalize_plan(std::move(plan), video, views, prices, power_law, period_months);
  }
  return decide_partial(video, views, prices, power_law, period_months);
}

TranscodingPlan decide_video(const VideoMeta& video, const PriceBook& prices,
                             const PowerLawParams& power_law, double period_months) {
  return decide_video(video, video.views_last_period, prices, power_law, period_months);
}

TranscodingPlan decide_partial(const VideoMeta& video, std::uint64_t views,
                               const PriceBook& prices, const PowerLawParams& power_law,
                               double period_months) {
  std::uint32_t threshold = 0;  // 0 = no GOP crossed the ratio
  for (const auto& gop : video.gops) {
    const double gop_storage = storage_cost(gop.size_mb, prices, period_months);
    const double gop_transcode = transcode_cost(gop.transcode_seconds, prices);
    const double expected_views = gop_views(views, gop.index, power_law);
    if (cost_ratio(gop_storage, gop_transcode, expected_views) > 1.0) {
      threshold = gop.index;
      break;
    }
  }

  TranscodingPlan plan;
  plan.video_id = video.id;
  if (threshold == 0) {
    plan.kind = PlanKind::FullyPre;
  } else if (threshold == 1) {
    plan.kind = PlanKind::FullyRe;
  } else {
    plan.kind = PlanKind::Partial;
    plan.gop_threshold = threshold;
  }
  return finalize_plan(std::move(plan), video, views, prices, power_law, period_months);
}

TranscodingPlan decide_partial(const VideoMeta& video, const PriceBook& prices,
                               const PowerLawParams& power_law, double period_months) {
  return decide_partial(video, video.views_last_period, prices, power_law, period_months);
}

CostBreakdown plan_cost(const VideoMeta& video, const TranscodingPlan& plan, std::uint64_t views,
                        const PriceBook& prices, const PowerLawParams& power_law,
                        bool include_cdn, double period_months) {
  if (plan.video_id != video.id) {
    throw std::invalid_argument("plan_cost: plan for video '" + plan.video_id +
                                "' applied to video '" + video.id + "'");
  }
  const std::uint32_t gop_count = static_cast<std::uint32_t>(video.gops.size());
  std::uint32_t boundary = 0;  // first re-transcoded GOP index; m+1 = store all
  switch (plan.kind) {
    case PlanKind::FullyPre:
      boundary = gop_count + 1;
      break;
    case PlanKind::FullyRe:
      boundary = 1;
      break;
    case PlanKind::Partial:
      if (!plan.gop_threshold || *plan.gop_threshold < 2 || *plan.gop_threshold > gop_count) {
        throw std::invalid_argument("plan_cost: partial plan for video '" + video.id +
                                    "' has an out-of-range gop_threshold");
      }
      boundary = *plan.gop_threshold;
      break;
  }

  CostBreakdown cost;
  double stored_gb = 0.0;
  for (const auto& gop : video.gops) {
    if (gop.index < boundary) {
      cost.storage += storage_cost(gop.size_mb, prices, period_months);
      stored_gb += gop.size_mb / kMbPerGb;
    } else {
      cost.transcode +=
          gop_views(views, gop.index, power_law) * transcode_cost(gop.transcode_seconds, prices);
    }
  }
  // Delivery is charged per gigabyte of stored content per period; the
  // on-demand suffix is served straight from the transcoder and carries
  // no delivery charge.
  cost.cdn = include_cdn ? cdn_cost(stored_gb, prices) * period_months : 0.0;
  cost.total = cost.storage + cost.transcode + cost.cdn;
  return cost;
}

CostBreakdown plan_cost(const VideoMeta& video, const TranscodingPlan& plan,
                        const PriceBook& prices, const PowerLawParams& power_law,
                        bool include_cdn, double period_months) {
  return plan_cost(video, plan, video.views_last_period, prices, power_law, include_cdn,
                   period_months);
}

GopOracleResult oracle_per_gop(const VideoMeta& video, std::uint64_t views,
                               const PriceBook& prices, const PowerLawParams& power_law,
                               double period_months) {
  GopOracleResult result;
  result.store_gop.resize(video.gops.size());
  double storage = 0.0;
  double transcode = 0.0;
  for (const auto& gop : video.gops) {
    const double store_cost = storage_cost(gop.size_mb, prices, period_months);
    const double recompute_cost =
        gop_views(views, gop.index, power_law) * transcode_cost(gop.transcode_seconds, prices);
    const bool store = store_cost <= recompute_cost;
    result.store_gop[gop.index - 1] = store;
    if (store) {
      storage += store_cost;
    } else {
      transcode += recompute_cost;
    }
  }
  result.expected_cost = storage + transcode;
  return result;
}

std::vector<TranscodingPlan> decide_repository(const Repository& repo, const PriceBook& prices,
                                               const PowerLawParams& power_law, unsigned jobs) {
  std::vector<TranscodingPlan> plans(repo.videos.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      plans[i] = decide_video(repo.videos[i], prices, power_law, repo.period_months);
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = repo.videos.size();
  if (jobs <= 1 || n < 2 * jobs) {
    run_range(0, n);
    return plans;
  }

  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t begin = std::min(n, j * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    if (begin < end) workers.emplace_back(run_range, begin, end);
  }
  for (auto& worker : workers) worker.join();
  return plans;
}

void save_plans_csv(std::span<const TranscodingPlan> plans, std::ostream& out) {
  out << "video_id,kind,gop_threshold,stored_mb,storage_cost,transcode_cost,cdn_cost,total_cost\n";
  for (const auto& plan : plans) {
    out << plan.video_id << ',' << to_string(plan.kind) << ',';
    if (plan.gop_threshold) out << *plan.gop_threshold;
    out << ',' << format_double(plan.stored_mb) << ',' << format_double(plan.projected_cost.storage)
        << ',' << format_double(plan.projected_cost.transcode) << ','
        << format_double(plan.projected_cost.cdn) << ',' << format_double(plan.projected_cost.total)
        << '\n';
  }
}

void save_plans_csv(std::span<const TranscodingPlan> plans, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("plans: cannot write " + file.string());
  save_plans_csv(plans, out);
}

}  // namespace vodplan
