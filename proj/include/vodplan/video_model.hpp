#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vodplan {

// One group of pictures: the unit at which storage/transcode decisions are
// made. Sizes are kept in MB throughout (one canonical unit; the cost model
// divides by 1024 to reach GB).
struct GopMeta {
  std::uint32_t index = 0;  // 1-based ordinal within the video
  double size_mb = 0.0;
  double transcode_seconds = 0.0;

  bool operator==(const GopMeta&) const = default;
};

struct VideoMeta {
  std::string id;
  std::vector<GopMeta> gops;  // indices must be exactly 1..m
  std::uint64_t views_last_period = 0;

  bool operator==(const VideoMeta&) const = default;
};

struct Repository {
  std::vector<VideoMeta> videos;
  double period_months = 1.0;

  bool operator==(const Repository&) const = default;
};

double video_size_mb(const VideoMeta& video);
double video_transcode_seconds(const VideoMeta& video);

// Throw std::invalid_argument on any violated invariant (empty GOP list,
// non-contiguous indices, non-positive size/time, malformed or duplicate
// ids, non-positive period).
void validate(const VideoMeta& video);
void validate(const Repository& repo);

// Repository metadata file: UTF-8, comma-separated, one record per line.
//   V,<id>,<views_last_period>
//   G,<index>,<size_mb>,<transcode_seconds>   (belongs to the last V row)
// Blank lines and lines starting with '#' are ignored.
Repository load_repository(std::istream& in, std::string_view source_name = "<stream>");
Repository load_repository(const std::filesystem::path& file);

void save_repository(const Repository& repo, std::ostream& out);
void save_repository(const Repository& repo, const std::filesystem::path& file);

}  // namespace vodplan
