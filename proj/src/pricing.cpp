#include "vodplan/pricing.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vodplan/text.hpp"

namespace vodplan {

namespace {

void check_price(double value, const char* key) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string("prices: ") + key + " must be finite");
  }
  if (value < 0.0) {
    throw std::invalid_argument(std::string("prices: ") + key + " must be >= 0, got " +
                                format_double(value));
  }
}

}  // namespace

void validate(const PriceBook& prices) {
  check_price(prices.transcode_per_hour, "transcode_per_hour");
  check_price(prices.storage_per_gb_month, "storage_per_gb_month");
  check_price(prices.cdn_per_gb, "cdn_per_gb");
}

PriceBook load_price_book(std::istream& in) {
  PriceBook prices;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      throw std::runtime_error("prices: line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + std::string(content) + "'");
    }
    const auto key = trim(content.substr(0, eq));
    const auto value_text = trim(content.substr(eq + 1));
    const double value = parse_double(value_text, "prices: key '" + std::string(key) + "'");
    if (key == "transcode_per_hour") {
      prices.transcode_per_hour = value;
    } else if (key == "storage_per_gb_month") {
      prices.storage_per_gb_month = value;
    } else if (key == "cdn_per_gb") {
      prices.cdn_per_gb = value;
    } else {
      throw std::runtime_error("prices: line " + std::to_string(line_no) + ": unknown key '" +
                               std::string(key) + "'");
    }
  }
  validate(prices);
  return prices;
}

PriceBook load_price_book(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("prices: cannot open " + file.string());
  return load_price_book(in);
}

void save_price_book(const PriceBook& prices, std::ostream& out) {
  out << "transcode_per_hour = " << format_double(prices.transcode_per_hour) << '\n'
      << "storage_per_gb_month = " << format_double(prices.storage_per_gb_month) << '\n'
      << "cdn_per_gb = " << format_double(prices.cdn_per_gb) << '\n';
}

void save_price_book(const PriceBook& prices, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("prices: cannot write " + file.string());
  save_price_book(prices, out);
}

}  // namespace vodplan
