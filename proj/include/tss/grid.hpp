#pragma once

#include <cstdint>
#include <string>

namespace tss {

// UTC wall-clock instant, second resolution.
struct Timestamp {
    std::int64_t seconds_since_epoch = 0;

    bool operator==(const Timestamp&) const = default;
    auto operator<=>(const Timestamp&) const = default;
};

// Accepts "YYYY-MM-DDTHH:MM:SS" with an optional trailing "Z"; a space may
// stand in for the "T". Throws std::invalid_argument with the offending text.
Timestamp parse_timestamp(const std::string& iso8601);
std::string format_timestamp(Timestamp ts);

// The sampling grid: slots_per_day consecutive slots of slot_hours each,
// starting at the time of day of `start`, on every trading day. Slot 0 starts
// at `start`. With skip_weekends, Saturdays and Sundays carry no slots and
// sample indices count trading slots only, so a lag of 15 slots is 30 working
// hours regardless of intervening weekends.
struct SampleGrid {
    Timestamp start;
    int slot_hours = 2;
    int slots_per_day = 5;
    bool skip_weekends = true;

    // Floors to the slot start: a timestamp between two slot starts belongs to
    // the earlier slot. Throws std::invalid_argument for timestamps before the
    // grid start, outside the daily trading window, or on a skipped weekend.
    std::int64_t slot_index(Timestamp ts) const;

    Timestamp slot_start(std::int64_t index) const;

    void validate() const;  // throws on nonsensical fields or weekend start

    // 2017-06-14T08:00:00Z, five 2-hour slots per day, weekends skipped.
    static SampleGrid default_grid();
};

}  // namespace tss
