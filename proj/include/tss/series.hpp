#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tss {

// One observation on the shared sample grid. Series are sparse: a sample_index
// that is absent from the series is a gap, and downstream consumers (lag
// pairing, fits, accuracy counts) skip it.
struct SeriesPoint {
    std::int64_t sample_index = 0;
    double value = 0.0;

    bool operator==(const SeriesPoint&) const = default;
};

// Ordered (sample_index, value) pairs with strictly increasing indices.
// The same shape serves TSS, price and CEFP series.
using Series = std::vector<SeriesPoint>;

// Throws std::invalid_argument on decreasing/duplicate indices or non-finite values.
void validate_series(const Series& s, const std::string& name = "series");

// Binary search; nullptr when the index is a gap.
const double* find_value(const Series& s, std::int64_t t);

enum class Direction { Up, Down, Flat };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

// Per-step price direction: the step ending at sample_index t, i.e.
// sign(price[t] - price[t-1]).
struct DirectionStep {
    std::int64_t sample_index = 0;
    Direction direction = Direction::Flat;

    bool operator==(const DirectionStep&) const = default;
};

using DirectionSeries = std::vector<DirectionStep>;

// One entry for every t where both t and t-1 are present in the series.
// Throws std::invalid_argument when the series has fewer than two points.
DirectionSeries directions(const Series& price);

}  // namespace tss
