#pragma once

#include <array>
#include <vector>

#include "officesim/errors.hpp"

namespace officesim {

constexpr bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

constexpr int days_in_year(int year) { return is_leap_year(year) ? 366 : 365; }

constexpr std::array<int, 12> month_lengths(int year) {
  std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (is_leap_year(year)) lengths[1] = 29;
  return lengths;
}

// Days since 1970-01-01 in the proleptic Gregorian calendar.
constexpr long days_from_civil(int year, int month, int day) {
  year -= month <= 2;
  const long era = (year >= 0 ? year : year - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(year - era * 400);
  const unsigned doy_of_march =
      (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2) / 5 +
      static_cast<unsigned>(day) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy_of_march;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

// 0 = Sunday ... 6 = Saturday
constexpr int weekday_from_civil(int year, int month, int day) {
  const long z = days_from_civil(year, month, day);
  return static_cast<int>(z >= -4 ? (z + 4) % 7 : (z + 5) % 7 + 6);
}

struct MonthDay {
  int month = 1;  // 1..12
  int day = 1;    // 1..31
};

// doy is 0-based within the year.
inline MonthDay month_day_from_doy(int year, int doy) {
  const auto lengths = month_lengths(year);
  int m = 0;
  while (m < 12 && doy >= lengths[static_cast<size_t>(m)]) {
    doy -= lengths[static_cast<size_t>(m)];
    ++m;
  }
  if (m >= 12) throw structural_error("day-of-year out of range");
  return {m + 1, doy + 1};
}

inline int doy_from_month_day(int year, int month, int day) {
  const auto lengths = month_lengths(year);
  int doy = day - 1;
  for (int m = 1; m < month; ++m) doy += lengths[static_cast<size_t>(m - 1)];
  return doy;
}

// Workweek calendar for one simulation year. Occupied hours follow the
// traditional small-office assumption (08:00-17:00 on workdays).
struct YearCalendar {
  int year = 2018;
  double occupied_start_hour = 8.0;
  double occupied_end_hour = 17.0;
  std::vector<int> holiday_doys;  // 0-based day-of-year

  static YearCalendar for_year(int y) {
    YearCalendar cal;
    cal.year = y;
    cal.holiday_doys = {
        doy_from_month_day(y, 1, 1),    // New Year's Day
        doy_from_month_day(y, 7, 4),    // Independence Day
        doy_from_month_day(y, 12, 25),  // Christmas Day
    };
    return cal;
  }

  int days() const { return days_in_year(year); }

  int weekday(int doy) const {
    const MonthDay md = month_day_from_doy(year, doy);
    return weekday_from_civil(year, md.month, md.day);
  }

  bool is_weekend(int doy) const {
    const int w = weekday(doy);
    return w == 0 || w == 6;
  }

  bool is_holiday(int doy) const {
    for (int h : holiday_doys)
      if (h == doy) return true;
    return false;
  }

  bool is_workday(int doy) const { return !is_weekend(doy) && !is_holiday(doy); }

  bool is_occupied(int doy, double hour_of_day) const {
    return is_workday(doy) && hour_of_day >= occupied_start_hour &&
           hour_of_day < occupied_end_hour;
  }
};

}  // namespace officesim
