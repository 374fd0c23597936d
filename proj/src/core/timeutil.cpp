#include "core/timeutil.hpp"

#include <time.h>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <mutex>

#include "core/error.hpp"

namespace evacwatch {

TimeBin floor_to_bin(CivilSeconds t) {
  CivilSeconds q = t / kBinSeconds;
  if (t % kBinSeconds != 0 && t < 0) --q;
  return TimeBin{q * kBinSeconds};
}

bool is_bin_aligned(CivilSeconds t) { return floor_to_bin(t).start == t; }

namespace {

// Howard Hinnant's civil date algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yi = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yi + (m <= 2));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

CivilSeconds civil_to_seconds(const CivilBreakdown& c) {
  return days_from_civil(c.year, c.month, c.day) * kDaySeconds +
         c.hour * 3600 + c.minute * 60 + c.second;
}

CivilBreakdown seconds_to_civil(CivilSeconds t) {
  std::int64_t days = floor_div(t, kDaySeconds);
  std::int64_t sod = t - days * kDaySeconds;
  CivilBreakdown c{};
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(sod / 3600);
  c.minute = static_cast<int>((sod % 3600) / 60);
  c.second = static_cast<int>(sod % 60);
  return c;
}

std::string format_iso(CivilSeconds t) {
  CivilBreakdown c = seconds_to_civil(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", c.year,
                c.month, c.day, c.hour, c.minute, c.second);
  return buf;
}

std::optional<CivilSeconds> parse_civil(std::string_view s) {
  // YYYY-MM-DD[ T]HH:MM[:SS]
  if (s.size() < 10) return std::nullopt;
  CivilBreakdown c{};
  if (s[4] != '-' || s[7] != '-') return std::nullopt;
  if (!parse_int(s.substr(0, 4), c.year) || !parse_int(s.substr(5, 2), c.month) ||
      !parse_int(s.substr(8, 2), c.day))
    return std::nullopt;
  if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31) return std::nullopt;
  if (s.size() == 10) return civil_to_seconds(c);
  if (s.size() < 16 || (s[10] != ' ' && s[10] != 'T') || s[13] != ':')
    return std::nullopt;
  if (!parse_int(s.substr(11, 2), c.hour) || !parse_int(s.substr(14, 2), c.minute))
    return std::nullopt;
  if (s.size() >= 19) {
    if (s[16] != ':' || !parse_int(s.substr(17, 2), c.second)) return std::nullopt;
    if (s.size() != 19) return std::nullopt;
  } else if (s.size() != 16) {
    return std::nullopt;
  }
  if (c.hour > 23 || c.minute > 59 || c.second > 60) return std::nullopt;
  return civil_to_seconds(c);
}

std::optional<CivilSeconds> parse_alert_datetime(std::string_view date,
                                                 std::string_view hour) {
  int d = 0, m = 0, y = 0, hh = 0, mm = 0;
  size_t s1 = date.find('/');
  if (s1 == std::string_view::npos) return std::nullopt;
  size_t s2 = date.find('/', s1 + 1);
  if (s2 == std::string_view::npos) return std::nullopt;
  if (!parse_int(date.substr(0, s1), d) ||
      !parse_int(date.substr(s1 + 1, s2 - s1 - 1), m) ||
      !parse_int(date.substr(s2 + 1), y))
    return std::nullopt;
  size_t c = hour.find(':');
  if (c == std::string_view::npos) return std::nullopt;
  if (!parse_int(hour.substr(0, c), hh) || !parse_int(hour.substr(c + 1), mm))
    return std::nullopt;
  if (m < 1 || m > 12 || d < 1 || d > 31 || hh > 23 || mm > 59 || y < 1000)
    return std::nullopt;
  return civil_to_seconds(CivilBreakdown{y, m, d, hh, mm, 0});
}

Window make_window(CivilSeconds start, CivilSeconds end) {
  if (!is_bin_aligned(start) || !is_bin_aligned(end))
    throw UsageError("window bounds must be aligned to 15-minute boundaries");
  if (end <= start) throw UsageError("window end must be after window start");
  return Window{start, end};
}

int Window::day_class_of(CivilSeconds t) const {
  return static_cast<int>(floor_div(t, kDaySeconds) - floor_div(start, kDaySeconds));
}

int Window::day_class_count() const {
  return day_class_of(end - 1) + 1;
}

int Window::tod_bin_of(CivilSeconds t) const {
  std::int64_t sod = t - floor_div(t, kDaySeconds) * kDaySeconds;
  return static_cast<int>(sod / kBinSeconds);
}

namespace {

std::mutex g_tz_mutex;

// libc-based offset lookup; TZ manipulation is process-global, hence the lock.
std::int64_t offset_at_locked(const std::string& tz, std::int64_t utc_epoch) {
  const char* old = getenv("TZ");
  std::string saved = old ? old : "";
  bool had = old != nullptr;
  setenv("TZ", tz.c_str(), 1);
  tzset();
  time_t t = static_cast<time_t>(utc_epoch);
  struct tm out{};
  std::int64_t off = 0;
  bool ok = localtime_r(&t, &out) != nullptr;
  if (ok) off = out.tm_gmtoff;
  if (had)
    setenv("TZ", saved.c_str(), 1);
  else
    unsetenv("TZ");
  tzset();
  if (!ok) throw InputError("cannot resolve timezone '" + tz + "'");
  return off;
}

bool parse_fixed_offset(const std::string& tz, std::int64_t& out) {
  std::string_view s = tz;
  if (s == "UTC" || s == "utc" || s == "Z") {
    out = 0;
    return true;
  }
  if (s.rfind("UTC", 0) == 0 || s.rfind("utc", 0) == 0) s.remove_prefix(3);
  if (s.empty() || (s[0] != '+' && s[0] != '-')) return false;
  int sign = s[0] == '-' ? -1 : 1;
  s.remove_prefix(1);
  int hh = 0, mm = 0;
  size_t colon = s.find(':');
  auto to_int = [](std::string_view v, int& x) {
    if (v.empty() || v.size() > 2) return false;
    x = 0;
    for (char c : v) {
      if (c < '0' || c > '9') return false;
      x = x * 10 + (c - '0');
    }
    return true;
  };
  if (colon == std::string_view::npos) {
    if (!to_int(s, hh)) return false;
  } else {
    if (!to_int(s.substr(0, colon), hh) || !to_int(s.substr(colon + 1), mm))
      return false;
  }
  if (hh > 14 || mm > 59) return false;
  out = sign * (hh * 3600 + mm * 60);
  return true;
}

}  // namespace

std::int64_t resolve_utc_offset(const std::string& tz, std::int64_t utc_start,
                                std::int64_t utc_end) {
  std::int64_t fixed = 0;
  if (parse_fixed_offset(tz, fixed)) return fixed;

  // glibc silently treats unknown TZ values as UTC; check the database first.
  if (tz.empty() || tz[0] == ':' || tz.find("..") != std::string::npos)
    throw InputError("invalid timezone '" + tz + "'");
  if (tz.find('/') != std::string::npos) {
    const char* dir = getenv("TZDIR");
    std::string path = std::string(dir ? dir : "/usr/share/zoneinfo") + "/" + tz;
    if (FILE* f = std::fopen(path.c_str(), "rb"))
      std::fclose(f);
    else
      throw InputError("unknown timezone '" + tz + "'");
  }

  std::lock_guard<std::mutex> lock(g_tz_mutex);
  std::int64_t off = offset_at_locked(tz, utc_start);
  // Probe every 6 hours; DST shifts are hour-scale, so this cannot miss one.
  for (std::int64_t t = utc_start; t <= utc_end; t += 6 * 3600) {
    if (offset_at_locked(tz, t) != off)
      throw InputError("window spans a DST transition in timezone '" + tz +
                       "'; split the input at the transition");
  }
  if (utc_end > utc_start && offset_at_locked(tz, utc_end) != off)
    throw InputError("window spans a DST transition in timezone '" + tz +
                     "'; split the input at the transition");
  return off;
}

std::int64_t resolve_utc_offset_civil(const std::string& tz, CivilSeconds start,
                                      CivilSeconds end) {
  std::int64_t fixed = 0;
  if (parse_fixed_offset(tz, fixed)) return fixed;
  // First approximation: civil == UTC. One correction pass is enough because
  // offsets are bounded by 14 hours and probes below re-check stability.
  std::int64_t off0 = resolve_utc_offset(tz, start - 14 * 3600, start + 14 * 3600);
  return resolve_utc_offset(tz, start - off0, end - off0);
}

}  // namespace evacwatch
