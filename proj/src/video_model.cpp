#include "vodplan/video_model.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "vodplan/text.hpp"

namespace vodplan {

double video_size_mb(const VideoMeta& video) {
  double total = 0.0;
  for (const auto& gop : video.gops) total += gop.size_mb;
  return total;
}

double video_transcode_seconds(const VideoMeta& video) {
  double total = 0.0;
  for (const auto& gop : video.gops) total += gop.transcode_seconds;
  return total;
}

void validate(const VideoMeta& video) {
  if (video.id.empty()) throw std::invalid_argument("video: empty id");
  if (video.id.find(',') != std::string::npos || video.id.find('\n') != std::string::npos ||
      video.id.find('\r') != std::string::npos) {
    throw std::invalid_argument("video '" + video.id + "': id must not contain ',' or newlines");
  }
  if (video.gops.empty()) {
    throw std::invalid_argument("video '" + video.id + "': needs at least one GOP");
  }
  std::uint32_t expected = 1;
  for (const auto& gop : video.gops) {
    if (gop.index != expected) {
      throw std::invalid_argument("video '" + video.id + "': GOP indices must be 1..m, found " +
                                  std::to_string(gop.index) + " where " +
                                  std::to_string(expected) + " was expected");
    }
    if (!(gop.size_mb > 0.0) || !std::isfinite(gop.size_mb)) {
      throw std::invalid_argument("video '" + video.id + "': GOP " + std::to_string(gop.index) +
                                  " size_mb must be > 0");
    }
    if (!(gop.transcode_seconds > 0.0) || !std::isfinite(gop.transcode_seconds)) {
      throw std::invalid_argument("video '" + video.id + "': GOP " + std::to_string(gop.index) +
                                  " transcode_seconds must be > 0");
    }
    ++expected;
  }
}

void validate(const Repository& repo) {
  if (!(repo.period_months > 0.0) || !std::isfinite(repo.period_months)) {
    throw std::invalid_argument("repository: period_months must be > 0");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(repo.videos.size());
  for (const auto& video : repo.videos) {
    validate(video);
    if (!seen.insert(video.id).second) {
      throw std::invalid_argument("repository: duplicate video id '" + video.id + "'");
    }
  }
}

Repository load_repository(std::istream& in, std::string_view source_name) {
  Repository repo;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& message) -> std::runtime_error {
    return std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                              message);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = split(content, ',');
    if (fields[0] == "V") {
      if (fields.size() != 3) throw fail("video row needs 3 fields: V,<id>,<views>");
      VideoMeta video;
      video.id = std::string(trim(fields[1]));
      video.views_last_period = parse_u64(fields[2], "views_last_period");
      repo.videos.push_back(std::move(video));
    } else if (fields[0] == "G") {
      if (fields.size() != 4) {
        throw fail("gop row needs 4 fields: G,<index>,<size_mb>,<transcode_seconds>");
      }
      if (repo.videos.empty()) throw fail("gop row before any video row");
      GopMeta gop;
      gop.index = static_cast<std::uint32_t>(parse_u64(fields[1], "gop index"));
      gop.size_mb = parse_double(fields[2], "size_mb");
      gop.transcode_seconds = parse_double(fields[3], "transcode_seconds");
      repo.videos.back().gops.push_back(gop);
    } else {
      throw fail("unknown row type '" + std::string(fields[0]) + "'");
    }
  }
  validate(repo);
  return repo;
}

Repository load_repository(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("repository: cannot open " + file.string());
  return load_repository(in, file.string());
}

void save_repository(const Repository& repo, std::ostream& out) {
  out << "# vodplan repository: V,<id>,<views>  G,<index>,<size_mb>,<transcode_seconds>\n";
  for (const auto& video : repo.videos) {
    out << "V," << video.id << ',' << video.views_last_period << '\n';
    for (const auto& gop : video.gops) {
      out << "G," << gop.index << ',' << format_double(gop.size_mb) << ','
          << format_double(gop.transcode_seconds) << '\n';
    }
  }
}

void save_repository(const Repository& repo, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("repository: cannot write " + file.string());
  save_repository(repo, out);
}

}  // namespace vodplan
