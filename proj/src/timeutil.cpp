#include "sentindex/timeutil.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

namespace sentindex {

namespace {

constexpr std::int64_t kDaySeconds = 86400;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

bool read_digits(std::string_view s, std::size_t& i, int count, int& out) {
    if (i + count > s.size()) return false;
    int v = 0;
    for (int k = 0; k < count; ++k) {
        char c = s[i + k];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    i += count;
    out = v;
    return true;
}

std::optional<std::int64_t> civil_to_days(int y, int m, int d) {
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return sys_days{ymd}.time_since_epoch().count();
}

std::chrono::year_month_day days_to_civil(std::int64_t days) {
    using namespace std::chrono;
    return year_month_day{sys_days{std::chrono::days{days}}};
}

}  // namespace

std::optional<BucketGranularity> parse_bucket_name(std::string_view name) {
    if (name == "day") return BucketGranularity::day;
    if (name == "week") return BucketGranularity::week;
    if (name == "month") return BucketGranularity::month;
    return std::nullopt;
}

const char* bucket_name(BucketGranularity b) {
    switch (b) {
        case BucketGranularity::day: return "day";
        case BucketGranularity::week: return "week";
        case BucketGranularity::month: return "month";
    }
    return "?";
}

std::optional<std::int64_t> parse_timestamp(std::string_view s) {
    if (s.empty()) return std::nullopt;

    // Bare integer: epoch seconds.
    {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool all_digits = i < s.size();
        for (std::size_t k = i; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
                all_digits = false;
                break;
            }
        }
        if (all_digits) {
            std::int64_t v = 0;
            for (std::size_t k = i; k < s.size(); ++k) {
                if (v > (INT64_MAX - 9) / 10) return std::nullopt;
                v = v * 10 + (s[k] - '0');
            }
            return s[0] == '-' ? -v : v;
        }
    }

    std::size_t i = 0;
    int year, month, day;
    if (!read_digits(s, i, 4, year)) return std::nullopt;
    if (i >= s.size() || s[i] != '-') return std::nullopt;
    ++i;
    if (!read_digits(s, i, 2, month)) return std::nullopt;
    if (i >= s.size() || s[i] != '-') return std::nullopt;
    ++i;
    if (!read_digits(s, i, 2, day)) return std::nullopt;

    auto days = civil_to_days(year, month, day);
    if (!days) return std::nullopt;

    int hh = 0, mm = 0, ss = 0;
    int offset = 0;
    if (i < s.size()) {
        if (s[i] != 'T' && s[i] != ' ') return std::nullopt;
        ++i;
        if (!read_digits(s, i, 2, hh)) return std::nullopt;
        if (i >= s.size() || s[i] != ':') return std::nullopt;
        ++i;
        if (!read_digits(s, i, 2, mm)) return std::nullopt;
        if (i < s.size() && s[i] == ':') {
            ++i;
            if (!read_digits(s, i, 2, ss)) return std::nullopt;
            if (i < s.size() && s[i] == '.') {
                ++i;
                std::size_t frac = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    ++i;
                    ++frac;
                }
                if (frac == 0) return std::nullopt;
            }
        }
        if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
        if (i < s.size()) {
            if (s[i] == 'Z') {
                ++i;
            } else if (s[i] == '+' || s[i] == '-') {
                auto off = parse_tz_offset(s.substr(i));
                if (!off) return std::nullopt;
                offset = *off;
                i = s.size();
            } else {
                return std::nullopt;
            }
        }
        if (i != s.size()) return std::nullopt;
    }
    return *days * kDaySeconds + hh * 3600 + mm * 60 + ss - offset;
}

std::optional<int> parse_tz_offset(std::string_view s) {
    if (s == "Z" || s == "z") return 0;
    if (s.size() != 6 || (s[0] != '+' && s[0] != '-') || s[3] != ':') return std::nullopt;
    std::size_t i = 1;
    int hh, mm;
    if (!read_digits(s, i, 2, hh)) return std::nullopt;
    ++i;  // ':'
    if (!read_digits(s, i, 2, mm)) return std::nullopt;
    if (hh > 14 || mm > 59) return std::nullopt;
    int off = hh * 3600 + mm * 60;
    return s[0] == '-' ? -off : off;
}

std::string format_tz_offset(int offset_seconds) {
    char buf[16];
    int abs = offset_seconds < 0 ? -offset_seconds : offset_seconds;
    std::snprintf(buf, sizeof buf, "%c%02d:%02d", offset_seconds < 0 ? '-' : '+', abs / 3600,
                  (abs % 3600) / 60);
    return buf;
}

std::int64_t bucket_floor(std::int64_t ts, BucketGranularity b, int offset_seconds) {
    const std::int64_t local = ts + offset_seconds;
    const std::int64_t day_idx = floor_div(local, kDaySeconds);
    switch (b) {
        case BucketGranularity::day:
            return day_idx * kDaySeconds - offset_seconds;
        case BucketGranularity::week: {
            // 1970-01-01 was a Thursday; weekday 0 is Monday.
            std::int64_t wd = ((day_idx + 3) % 7 + 7) % 7;
            return (day_idx - wd) * kDaySeconds - offset_seconds;
        }
        case BucketGranularity::month: {
            auto ymd = days_to_civil(day_idx);
            auto first = civil_to_days(static_cast<int>(ymd.year()),
                                       static_cast<int>(unsigned(ymd.month())), 1);
            return *first * kDaySeconds - offset_seconds;
        }
    }
    return ts;
}

std::int64_t bucket_next(std::int64_t bucket_start, BucketGranularity b, int offset_seconds) {
    switch (b) {
        case BucketGranularity::day:
            return bucket_start + kDaySeconds;
        case BucketGranularity::week:
            return bucket_start + 7 * kDaySeconds;
        case BucketGranularity::month: {
            const std::int64_t day_idx = floor_div(bucket_start + offset_seconds, kDaySeconds);
            auto ymd = days_to_civil(day_idx);
            int y = static_cast<int>(ymd.year());
            int m = static_cast<int>(unsigned(ymd.month()));
            if (++m > 12) {
                m = 1;
                ++y;
            }
            return *civil_to_days(y, m, 1) * kDaySeconds - offset_seconds;
        }
    }
    return bucket_start;
}

std::string format_bucket_date(std::int64_t bucket_start, int offset_seconds) {
    const std::int64_t day_idx = floor_div(bucket_start + offset_seconds, kDaySeconds);
    auto ymd = days_to_civil(day_idx);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

std::string format_iso8601_utc(std::int64_t ts) {
    const std::int64_t day_idx = floor_div(ts, kDaySeconds);
    const std::int64_t rem = ts - day_idx * kDaySeconds;
    auto ymd = days_to_civil(day_idx);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<int>(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60));
    return buf;
}

}  // namespace sentindex
