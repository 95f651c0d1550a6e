#include "vodplan/cost_engine.hpp"

#include <limits>
#include <stdexcept>

namespace vodplan {

double storage_cost(double size_mb, const PriceBook& prices, double period_months) {
  if (size_mb < 0.0) throw std::domain_error("storage_cost: size_mb must be >= 0");
  if (!(period_months > 0.0)) throw std::domain_error("storage_cost: period_months must be > 0");
  return size_mb * prices.storage_per_gb_month / kMbPerGb * period_months;
}

double transcode_cost(double tau_seconds, const PriceBook& prices) {
  if (tau_seconds < 0.0) throw std::domain_error("transcode_cost: tau_seconds must be >= 0");
  return prices.transcode_per_hour * tau_seconds / kSecondsPerHour;
}

double cost_ratio(double storage, double transcode_once, double views) {
  const double denominator = views * transcode_once;
  if (denominator == 0.0) return std::numeric_limits<double>::infinity();
  return storage / denominator;
}

double cdn_cost(double delivered_gb, const PriceBook& prices) {
  if (delivered_gb < 0.0) throw std::domain_error("cdn_cost: delivered_gb must be >= 0");
  return delivered_gb * prices.cdn_per_gb;
}

}  // namespace vodplan
