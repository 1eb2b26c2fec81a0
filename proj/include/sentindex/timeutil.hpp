#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sentindex {

enum class BucketGranularity { day, week, month };

std::optional<BucketGranularity> parse_bucket_name(std::string_view name);
const char* bucket_name(BucketGranularity b);

// Accepts integer epoch seconds or ISO-8601: "YYYY-MM-DD" (midnight UTC) or
// "YYYY-MM-DD[T ]HH:MM[:SS[.fraction]]" with optional "Z" / "+HH:MM" /
// "-HH:MM" suffix (no suffix means UTC). Fractional seconds are truncated.
std::optional<std::int64_t> parse_timestamp(std::string_view s);

// "+HH:MM" / "-HH:MM" (or "Z") to seconds east of UTC.
std::optional<int> parse_tz_offset(std::string_view s);
std::string format_tz_offset(int offset_seconds);

// Start of the bucket containing ts, as a UTC instant. Alignment happens in
// the frame shifted by offset_seconds: days start at local midnight, weeks
// on local Monday, months on the local 1st.
std::int64_t bucket_floor(std::int64_t ts, BucketGranularity b, int offset_seconds);

// Start of the bucket after the one starting at bucket_start.
std::int64_t bucket_next(std::int64_t bucket_start, BucketGranularity b, int offset_seconds);

// The local-frame civil date of a bucket start, "YYYY-MM-DD".
std::string format_bucket_date(std::int64_t bucket_start, int offset_seconds);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601_utc(std::int64_t ts);

}  // namespace sentindex
