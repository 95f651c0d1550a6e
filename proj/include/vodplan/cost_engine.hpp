#pragma once

#include "vodplan/pricing.hpp"

namespace vodplan {

inline constexpr double kMbPerGb = 1024.0;
inline constexpr double kSecondsPerHour = 3600.0;

// Cost components in dollars per billing period. `transcode` is the cost
// of a single transcoding run where a plan is not involved; in a plan
// projection it is the expected per-period spend (per-GOP expected views
// times per-run cost, summed over the re-transcoded GOPs).
struct CostBreakdown {
  double storage = 0.0;
  double transcode = 0.0;
  double cdn = 0.0;
  double total = 0.0;

  bool operator==(const CostBreakdown&) const = default;
};

// Storage: size_mb * storage price / 1024, scaled by the period length.
double storage_cost(double size_mb, const PriceBook& prices, double period_months = 1.0);

// One transcoding run: hourly VM price prorated to the second. Callers
// multiply by views for repeated on-demand runs.
double transcode_cost(double tau_seconds, const PriceBook& prices);

// storage / (views * transcode_once). Returns +infinity when the
// denominator is zero; downstream treats that as "do not store".
double cost_ratio(double storage, double transcode_once, double views);

// Delivery charge for the given volume.
double cdn_cost(double delivered_gb, const PriceBook& prices);

}  // namespace vodplan
