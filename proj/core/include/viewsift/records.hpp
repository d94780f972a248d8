#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace viewsift {

// IPv4 address, host byte order.
struct Ipv4 {
  uint32_t addr = 0;

  static std::optional<Ipv4> parse(std::string_view text);
  std::string str() const;  // canonical dotted quad

  auto operator<=>(const Ipv4&) const = default;
};

// One view report from the player log.
struct ViewRecord {
  int64_t timestamp = 0;  // seconds since Unix epoch, UTC
  std::string video_id;
  Ipv4 ip;
  std::optional<std::string> user_id;  // absent for anonymous views

  bool operator==(const ViewRecord&) const = default;
};

enum class VideoCategory { Ugc, Mv, Tv, Movie, News, Sports, Other };

std::string_view to_string(VideoCategory c);
std::optional<VideoCategory> parse_category(std::string_view text);

struct VideoMeta {
  std::string video_id;
  VideoCategory category = VideoCategory::Other;
  int64_t release_day = 0;  // UTC days since Unix epoch

  bool operator==(const VideoMeta&) const = default;
};

inline constexpr int64_t kSecondsPerDay = 86400;

// UTC day number of a timestamp (floor division, safe for all int64 inputs).
constexpr int64_t day_of_timestamp(int64_t ts) {
  int64_t d = ts / kSecondsPerDay;
  if (ts % kSecondsPerDay < 0) --d;
  return d;
}

std::string day_to_string(int64_t day_number);            // YYYY-MM-DD
std::optional<int64_t> parse_day(std::string_view text);  // YYYY-MM-DD

// All records of one UTC day, timestamps within [day*86400, (day+1)*86400).
struct DayBucket {
  int64_t day = 0;
  std::vector<ViewRecord> records;
};

enum class ParseErrorKind {
  FieldCount,
  BadTimestamp,
  InvalidIp,
  BadVideoId,
  BadUserId,
  BadCategory,
  BadDate,
  DuplicateVideoId,
};
std::string_view to_string(ParseErrorKind k);

struct ParseError {
  size_t line = 0;  // 1-based; 0 when parsing a bare string
  ParseErrorKind kind = ParseErrorKind::FieldCount;
  std::string detail;
};

// View log line (no trailing newline), bit-exact TSV schema:
//   epoch_seconds<TAB>video_id<TAB>dotted_quad_ipv4<TAB>user_id_or_dash
std::optional<ViewRecord> parse_record(std::string_view line, ParseError& err);
std::string serialize_record(const ViewRecord& r);

// Metadata line: video_id<TAB>category<TAB>YYYY-MM-DD
std::optional<VideoMeta> parse_meta_line(std::string_view line, ParseError& err);
std::string serialize_meta(const VideoMeta& m);

struct ReadOptions {
  bool strict = false;          // abort at the first malformed line
  size_t max_kept_errors = 20;  // per-line detail kept for the first few only
};

struct ReadStats {
  size_t lines = 0;
  size_t parsed = 0;
  size_t rejected = 0;
  bool aborted = false;   // strict mode hit a malformed line
  bool io_error = false;  // stream failed before EOF
  std::vector<ParseError> errors;

  void note(const ParseError& e, const ReadOptions& opts);
};

std::vector<ViewRecord> read_log(std::istream& in, ReadStats& stats,
                                 const ReadOptions& opts = {});
// Throws std::runtime_error if the file cannot be opened.
std::vector<ViewRecord> read_log_file(const std::string& path, ReadStats& stats,
                                      const ReadOptions& opts = {});
void write_log(std::ostream& out, std::span<const ViewRecord> records);

// Rejects duplicate video ids (each duplicate line counts as one error).
std::vector<VideoMeta> read_meta(std::istream& in, ReadStats& stats,
                                 const ReadOptions& opts = {});
std::vector<VideoMeta> read_meta_file(const std::string& path, ReadStats& stats,
                                      const ReadOptions& opts = {});
void write_meta(std::ostream& out, std::span<const VideoMeta> meta);

// Partitions records into per-UTC-day buckets, sorted by day. Records keep
// their input order inside each bucket.
std::vector<DayBucket> bucket_by_day(std::span<const ViewRecord> records);

}  // namespace viewsift
