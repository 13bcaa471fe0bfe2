#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "officesim/calendar.hpp"
#include "officesim/errors.hpp"

namespace officesim {

// One hourly observation, local standard time, hour-beginning convention.
struct WeatherRecord {
  int month = 1;
  int day = 1;
  int hour = 0;  // 0..23
  double dry_bulb_c = 0;
  double rh_pct = 0;
  double ghi_wm2 = 0;
  double wind_ms = 0;
};

struct WeatherSeries {
  std::string location_id;  // climate-zone tag, set by the scenario config
  int year = 2018;
  std::vector<WeatherRecord> records;  // gap-free hourly, 8760 or 8784

  int days() const { return static_cast<int>(records.size()) / 24; }
  const WeatherRecord& at(int doy, int hour) const {
    return records[static_cast<size_t>(doy) * 24 + static_cast<size_t>(hour)];
  }
};

struct DailyStats {
  int month = 1;
  int day = 1;
  double mean_oat = 0;
  double max_oat = 0;
  double min_oat = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

inline double parse_field_double(const std::string& raw, int line_no, const char* what) {
  const std::string s = trim(raw);
  double value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || s.empty())
    throw parse_error("line " + std::to_string(line_no) + ": non-numeric " +
                      std::string(what) + " field '" + s + "'");
  return value;
}

inline int parse_field_int(const std::string& raw, int line_no, const char* what) {
  const std::string s = trim(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw parse_error("line " + std::to_string(line_no) + ": non-numeric " +
                      std::string(what) + " field '" + s + "'");
  return value;
}

inline void validate_record(const WeatherRecord& r, int line_no) {
  auto fail = [&](const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
  };
  // EPW missing-value sentinels first, for a clearer message.
  if (r.dry_bulb_c >= 99.0) fail("dry-bulb missing-value sentinel");
  if (r.rh_pct >= 999.0) fail("relative-humidity missing-value sentinel");
  if (r.ghi_wm2 >= 9999.0) fail("irradiance missing-value sentinel");
  if (r.wind_ms >= 999.0) fail("wind-speed missing-value sentinel");
  if (r.dry_bulb_c < -70.0 || r.dry_bulb_c > 70.0)
    fail("dry-bulb out of range [-70, 70]");
  if (r.rh_pct < 0.0 || r.rh_pct > 100.0) fail("relative humidity out of [0, 100]");
  if (r.ghi_wm2 < 0.0) fail("negative irradiance");
  if (r.wind_ms < 0.0) fail("negative wind speed");
}

// "YYYY-MM-DDTHH:MM" with optional ":SS".
struct ParsedTimestamp {
  int year, month, day, hour;
};

inline ParsedTimestamp parse_timestamp(const std::string& raw, int line_no) {
  const std::string s = trim(raw);
  auto fail = [&]() {
    throw parse_error("line " + std::to_string(line_no) +
                      ": bad timestamp '" + s + "'");
  };
  if (s.size() < 16) fail();
  if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') || s[13] != ':')
    fail();
  auto num = [&](size_t pos, size_t len) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, v);
    if (ec != std::errc() || ptr != s.data() + pos + len) fail();
    return v;
  };
  ParsedTimestamp t{num(0, 4), num(5, 2), num(8, 2), num(11, 2)};
  if (t.month < 1 || t.month > 12 || t.day < 1 || t.day > 31 || t.hour < 0 ||
      t.hour > 23)
    fail();
  if (num(14, 2) != 0) fail();  // sub-hourly rows not supported
  return t;
}

inline void check_series_structure(const WeatherSeries& series) {
  const size_t n = series.records.size();
  if (n != 8760 && n != 8784)
    throw structural_error("expected 8760 or 8784 hourly records, got " +
                           std::to_string(n));
  const bool leap = n == 8784;
  if (is_leap_year(series.year) != leap)
    throw structural_error("record count does not match calendar year " +
                           std::to_string(series.year));
  const auto lengths = month_lengths(series.year);
  size_t i = 0;
  for (int m = 0; m < 12; ++m) {
    for (int d = 1; d <= lengths[static_cast<size_t>(m)]; ++d) {
      for (int h = 0; h < 24; ++h, ++i) {
        const WeatherRecord& r = series.records[i];
        if (r.month != m + 1 || r.day != d || r.hour != h)
          throw structural_error(
              "timestamps not strictly hourly at record " + std::to_string(i + 1) +
              " (found " + std::to_string(r.month) + "-" + std::to_string(r.day) +
              " hour " + std::to_string(r.hour) + ")");
      }
    }
  }
}

inline WeatherSeries parse_simple_csv(std::istream& in, int line_no) {
  WeatherSeries series;
  std::string line;
  bool first = true;
  long prev_stamp = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5)
      throw parse_error("line " + std::to_string(line_no) + ": expected 5 columns, got " +
                        std::to_string(fields.size()));
    const ParsedTimestamp t = parse_timestamp(fields[0], line_no);
    WeatherRecord r;
    r.month = t.month;
    r.day = t.day;
    r.hour = t.hour;
    r.dry_bulb_c = parse_field_double(fields[1], line_no, "dry-bulb");
    r.rh_pct = parse_field_double(fields[2], line_no, "relative-humidity");
    r.ghi_wm2 = parse_field_double(fields[3], line_no, "irradiance");
    r.wind_ms = parse_field_double(fields[4], line_no, "wind-speed");
    validate_record(r, line_no);
    const long stamp = days_from_civil(t.year, t.month, t.day) * 24 + t.hour;
    if (first) {
      series.year = t.year;
      if (t.month != 1 || t.day != 1 || t.hour != 0)
        throw structural_error("series must start at January 1, hour 0");
      first = false;
    } else if (stamp != prev_stamp + 1 || t.year != series.year) {
      throw structural_error("line " + std::to_string(line_no) +
                             ": timestamps not strictly hourly");
    }
    prev_stamp = stamp;
    series.records.push_back(r);
  }
  check_series_structure(series);
  return series;
}

inline WeatherSeries parse_epw(std::istream& in, const std::string& first_line) {
  // 8 header lines total (LOCATION ... DATA PERIODS), then hourly rows.
  std::string line;
  int line_no = 1;  // first_line was line 1
  for (int i = 0; i < 7; ++i) {
    if (!std::getline(in, line))
      throw structural_error("truncated EPW header");
    ++line_no;
  }
  (void)first_line;
  WeatherSeries series;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() < 22)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected at least 22 columns, got " +
                        std::to_string(fields.size()));
    WeatherRecord r;
    const int year = parse_field_int(fields[0], line_no, "year");
    r.month = parse_field_int(fields[1], line_no, "month");
    r.day = parse_field_int(fields[2], line_no, "day");
    const int hour = parse_field_int(fields[3], line_no, "hour");  // 1..24
    if (hour < 1 || hour > 24)
      throw parse_error("line " + std::to_string(line_no) + ": hour out of 1..24");
    r.hour = hour - 1;
    // EPW columns (1-indexed): 7 dry-bulb, 9 RH, 14 GHI, 22 wind speed.
    r.dry_bulb_c = parse_field_double(fields[6], line_no, "dry-bulb");
    r.rh_pct = parse_field_double(fields[8], line_no, "relative-humidity");
    r.ghi_wm2 = parse_field_double(fields[13], line_no, "irradiance");
    r.wind_ms = parse_field_double(fields[21], line_no, "wind-speed");
    validate_record(r, line_no);
    if (first) {
      series.year = year;
      first = false;
    }
    series.records.push_back(r);
  }
  // TMY files mix source years; scheduling uses the first row's year, nudged
  // so that the calendar length matches the record count.
  if (series.records.size() == 8760 && is_leap_year(series.year))
    series.year += 1;
  if (series.records.size() == 8784 && !is_leap_year(series.year))
    series.year = 2020;
  check_series_structure(series);
  return series;
}

inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace detail

// Accepts either the simplified CSV layout (header
// "timestamp,dry_bulb_c,rh_pct,ghi_wm2,wind_ms") or an EPW-layout file
// (8 header lines, then hourly rows).
inline WeatherSeries parse_weather(std::istream& in) {
  std::string first_line;
  if (!std::getline(in, first_line))
    throw structural_error("empty weather stream");
  if (detail::trim(first_line).rfind("timestamp", 0) == 0)
    return detail::parse_simple_csv(in, 1);
  return detail::parse_epw(in, first_line);
}

// Simplified CSV emission; exact round-trip (shortest-representation floats).
inline void write_weather_csv(std::ostream& out, const WeatherSeries& series) {
  out << "timestamp,dry_bulb_c,rh_pct,ghi_wm2,wind_ms\n";
  for (const WeatherRecord& r : series.records) {
    char stamp[24];
    std::snprintf(stamp, sizeof(stamp), "%04d-%02d-%02dT%02d:00", series.year,
                  r.month, r.day, r.hour);
    out << stamp << ',' << detail::format_double(r.dry_bulb_c) << ','
        << detail::format_double(r.rh_pct) << ',' << detail::format_double(r.ghi_wm2)
        << ',' << detail::format_double(r.wind_ms) << '\n';
  }
}

inline std::vector<DailyStats> daily_stats(const WeatherSeries& series) {
  std::vector<DailyStats> stats;
  stats.reserve(static_cast<size_t>(series.days()));
  for (int d = 0; d < series.days(); ++d) {
    DailyStats s;
    const WeatherRecord& first = series.at(d, 0);
    s.month = first.month;
    s.day = first.day;
    double sum = 0;
    s.max_oat = -1e30;
    s.min_oat = 1e30;
    for (int h = 0; h < 24; ++h) {
      const double t = series.at(d, h).dry_bulb_c;
      sum += t;
      s.max_oat = std::max(s.max_oat, t);
      s.min_oat = std::min(s.min_oat, t);
    }
    s.mean_oat = sum / 24.0;
    stats.push_back(s);
  }
  return stats;
}

// Mean of the 30 daily means strictly preceding `doy`; January wraps around
// to the end of the same annual series.
inline double prevailing_mean_oat(const std::vector<DailyStats>& stats, int doy) {
  const int n = static_cast<int>(stats.size());
  if (n < 30) throw structural_error("need at least 30 daily-stat entries");
  if (doy < 0 || doy >= n) throw structural_error("day-of-year out of range");
  double sum = 0;
  for (int k = 1; k <= 30; ++k) sum += stats[static_cast<size_t>((doy - k + n) % n)].mean_oat;
  return sum / 30.0;
}

}  // namespace officesim
