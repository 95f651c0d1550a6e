#pragma once

#include <filesystem>
#include <iosfwd>

namespace vodplan {

// Cloud unit prices. Defaults are the AWS rates the cost model was built
// around: t2-small compute per hour, S3 storage per GB-month, CloudFront
// delivery per GB.
struct PriceBook {
  double transcode_per_hour = 0.026;
  double storage_per_gb_month = 0.03;
  double cdn_per_gb = 0.085;

  bool operator==(const PriceBook&) const = default;
};

// All prices must be finite and >= 0. Throws std::invalid_argument naming
// the offending key.
void validate(const PriceBook& prices);

// Flat key/value config: `transcode_per_hour`, `storage_per_gb_month`,
// `cdn_per_gb`, one `key = value` per line, `#` comments. Absent keys keep
// their defaults; unknown keys are an error.
PriceBook load_price_book(std::istream& in);
PriceBook load_price_book(const std::filesystem::path& file);

void save_price_book(const PriceBook& prices, std::ostream& out);
void save_price_book(const PriceBook& prices, const std::filesystem::path& file);

}  // namespace vodplan
