#ifndef EVACWATCH_CORE_TIMEUTIL_HPP
#define EVACWATCH_CORE_TIMEUTIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace evacwatch {

// All analysis runs on one civil clock. Timestamps are stored as "civil
// seconds": seconds since 1970-01-01 00:00:00 on that clock, with no UTC
// offset applied. Epoch-second inputs are shifted onto the civil clock at
// parse time; windows that would span a DST transition are rejected up
// front, so a single fixed offset is always valid.
using CivilSeconds = std::int64_t;

inline constexpr std::int64_t kBinSeconds = 900;
inline constexpr int kBinsPerDay = 96;
inline constexpr std::int64_t kDaySeconds = 86400;

struct TimeBin {
  CivilSeconds start = 0;

  friend bool operator==(TimeBin a, TimeBin b) { return a.start == b.start; }
  friend bool operator<(TimeBin a, TimeBin b) { return a.start < b.start; }
};

// Floors toward -infinity, so pre-1970 instants bin correctly too.
TimeBin floor_to_bin(CivilSeconds t);

bool is_bin_aligned(CivilSeconds t);

struct CivilBreakdown {
  int year, month, day, hour, minute, second;
};

CivilSeconds civil_to_seconds(const CivilBreakdown& c);
CivilBreakdown seconds_to_civil(CivilSeconds t);

// "YYYY-MM-DDTHH:MM:SS" (no zone designator; the configured civil clock).
std::string format_iso(CivilSeconds t);

// Accepts "YYYY-MM-DD HH:MM[:SS]" with ' ' or 'T' separator, or a bare date
// "YYYY-MM-DD" (midnight).
std::optional<CivilSeconds> parse_civil(std::string_view s);

// Alert sheet formats: date "D/M/YYYY" or "DD/MM/YYYY", hour "HH:MM" 24h.
std::optional<CivilSeconds> parse_alert_datetime(std::string_view date,
                                                 std::string_view hour);

// A half-open, bin-aligned interval [start, end).
struct Window {
  CivilSeconds start = 0;
  CivilSeconds end = 0;

  bool contains(CivilSeconds t) const { return t >= start && t < end; }
  std::int64_t bin_count() const { return (end - start) / kBinSeconds; }
  std::int64_t bin_index(CivilSeconds t) const {
    return (floor_to_bin(t).start - start) / kBinSeconds;
  }
  CivilSeconds bin_start(std::int64_t index) const {
    return start + index * kBinSeconds;
  }
  // Days are civil dates; class 0 is the date containing `start`.
  int day_class_of(CivilSeconds t) const;
  int day_class_count() const;
  int tod_bin_of(CivilSeconds t) const;  // 0..95

  friend bool operator==(const Window& a, const Window& b) {
    return a.start == b.start && a.end == b.end;
  }
};

Window make_window(CivilSeconds start, CivilSeconds end);

// Resolves a timezone spec to the fixed UTC offset valid across [start,end)
// in UTC time. Accepts IANA names (via the system tz database), "UTC", and
// fixed offsets like "UTC-3", "+05:30", "-03:00". Throws InputError when the
// name is unknown or the interval straddles a DST transition.
std::int64_t resolve_utc_offset(const std::string& tz, std::int64_t utc_start,
                                std::int64_t utc_end);

// Same check but for a window given in civil time: converts the civil bounds
// through the zone first, then verifies offset stability.
std::int64_t resolve_utc_offset_civil(const std::string& tz, CivilSeconds start,
                                      CivilSeconds end);

}  // namespace evacwatch

#endif
