#include "tss/grid.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace tss {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

// floor division for possibly-negative numerators
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// 0 = Monday ... 6 = Sunday; day 0 (1970-01-01) was a Thursday
int day_of_week(std::int64_t days_since_epoch) {
    return static_cast<int>(floor_mod(days_since_epoch + 3, 7));
}

bool is_weekend(std::int64_t days_since_epoch) { return day_of_week(days_since_epoch) >= 5; }

// trading days in [from, to) when weekends are skipped; requires from <= to
std::int64_t weekdays_between(std::int64_t from, std::int64_t to) {
    std::int64_t full_weeks = (to - from) / 7;
    std::int64_t count = full_weeks * 5;
    for (std::int64_t d = from + full_weeks * 7; d < to; ++d) {
        if (!is_weekend(d)) ++count;
    }
    return count;
}

}  // namespace

Timestamp parse_timestamp(const std::string& text) {
    int y = 0, mo = 0, da = 0, h = 0, mi = 0, se = 0;
    char sep = 0, tail = 0;
    int n = std::sscanf(text.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%c", &y, &mo, &da, &sep, &h, &mi,
                        &se, &tail);
    bool ok = (n == 7 || n == 8) && (sep == 'T' || sep == ' ') && (n == 7 || tail == 'Z');
    if (ok) {
        std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                        std::chrono::day{unsigned(da)}};
        ok = ymd.ok() && h >= 0 && h < 24 && mi >= 0 && mi < 60 && se >= 0 && se < 60;
        if (ok) {
            std::chrono::sys_days days{ymd};
            return Timestamp{days.time_since_epoch().count() * kSecondsPerDay + h * 3600 +
                             mi * 60 + se};
        }
    }
    throw std::invalid_argument("cannot parse timestamp '" + text +
                                "' (expected YYYY-MM-DDTHH:MM:SSZ)");
}

std::string format_timestamp(Timestamp ts) {
    std::int64_t days = floor_div(ts.seconds_since_epoch, kSecondsPerDay);
    std::int64_t sod = floor_mod(ts.seconds_since_epoch, kSecondsPerDay);
    std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()), int(sod / 3600),
                  int(sod / 60 % 60), int(sod % 60));
    return buf;
}

void SampleGrid::validate() const {
    if (slot_hours <= 0 || slots_per_day <= 0 || slot_hours * slots_per_day > 24) {
        throw std::invalid_argument("SampleGrid: slot_hours x slots_per_day must fit in a day");
    }
    std::int64_t day = floor_div(start.seconds_since_epoch, kSecondsPerDay);
    if (skip_weekends && is_weekend(day)) {
        throw std::invalid_argument("SampleGrid: start falls on a skipped weekend");
    }
    std::int64_t sod = floor_mod(start.seconds_since_epoch, kSecondsPerDay);
    if (sod + std::int64_t(slot_hours) * slots_per_day * 3600 > kSecondsPerDay) {
        throw std::invalid_argument("SampleGrid: daily trading window crosses midnight");
    }
}

std::int64_t SampleGrid::slot_index(Timestamp ts) const {
    validate();
    std::int64_t start_day = floor_div(start.seconds_since_epoch, kSecondsPerDay);
    std::int64_t open_sod = floor_mod(start.seconds_since_epoch, kSecondsPerDay);
    std::int64_t day = floor_div(ts.seconds_since_epoch, kSecondsPerDay);
    std::int64_t sod = floor_mod(ts.seconds_since_epoch, kSecondsPerDay);

    if (ts < start) {
        throw std::invalid_argument("timestamp " + format_timestamp(ts) +
                                    " is before the grid start " + format_timestamp(start));
    }
    if (skip_weekends && is_weekend(day)) {
        throw std::invalid_argument("timestamp " + format_timestamp(ts) +
                                    " falls on a weekend outside the grid");
    }
    std::int64_t window = std::int64_t(slot_hours) * slots_per_day * 3600;
    std::int64_t offset = sod - open_sod;
    if (offset < 0 || offset >= window) {
        throw std::invalid_argument("timestamp " + format_timestamp(ts) +
                                    " is outside the daily trading window");
    }
    std::int64_t day_ordinal =
        skip_weekends ? weekdays_between(start_day, day) : (day - start_day);
    return day_ordinal * slots_per_day + offset / (std::int64_t(slot_hours) * 3600);
}

Timestamp SampleGrid::slot_start(std::int64_t index) const {
    validate();
    if (index < 0) {
        throw std::invalid_argument("slot index must be >= 0, got " + std::to_string(index));
    }
    std::int64_t day_ordinal = index / slots_per_day;
    std::int64_t slot_in_day = index % slots_per_day;
    std::int64_t start_day = floor_div(start.seconds_since_epoch, kSecondsPerDay);
    std::int64_t day = start_day;
    if (skip_weekends) {
        day += (day_ordinal / 5) * 7;
        for (std::int64_t left = day_ordinal % 5; left > 0; --left) {
            ++day;
            while (is_weekend(day)) ++day;
        }
    } else {
        day += day_ordinal;
    }
    std::int64_t open_sod = floor_mod(start.seconds_since_epoch, kSecondsPerDay);
    return Timestamp{day * kSecondsPerDay + open_sod + slot_in_day * std::int64_t(slot_hours) * 3600};
}

SampleGrid SampleGrid::default_grid() {
    return SampleGrid{parse_timestamp("2017-06-14T08:00:00Z"), 2, 5, true};
}

}  // namespace tss
