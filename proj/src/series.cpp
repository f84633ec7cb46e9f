#include "tss/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tss {

void validate_series(const Series& s, const std::string& name) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s[i].value)) {
            throw std::invalid_argument(name + ": non-finite value at sample_index " +
                                        std::to_string(s[i].sample_index));
        }
        if (i > 0 && s[i].sample_index <= s[i - 1].sample_index) {
            throw std::invalid_argument(name + ": sample_index not strictly increasing at " +
                                        std::to_string(s[i].sample_index));
        }
    }
}

const double* find_value(const Series& s, std::int64_t t) {
    auto it = std::lower_bound(s.begin(), s.end(), t, [](const SeriesPoint& p, std::int64_t idx) {
        return p.sample_index < idx;
    });
    if (it == s.end() || it->sample_index != t) return nullptr;
    return &it->value;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::Down: return "down";
        case Direction::Flat: return "flat";
    }
    throw std::logic_error("unreachable direction value");
}

Direction direction_from_string(const std::string& s) {
    if (s == "up") return Direction::Up;
    if (s == "down") return Direction::Down;
    if (s == "flat") return Direction::Flat;
    throw std::invalid_argument("unknown direction '" + s + "'");
}

DirectionSeries directions(const Series& price) {
    if (price.size() < 2) {
        throw std::invalid_argument("directions: series needs at least 2 points");
    }
    DirectionSeries out;
    out.reserve(price.size() - 1);
    for (std::size_t i = 1; i < price.size(); ++i) {
        if (price[i].sample_index != price[i - 1].sample_index + 1) continue;  // gap
        Direction d = Direction::Flat;
        if (price[i].value > price[i - 1].value) d = Direction::Up;
        else if (price[i].value < price[i - 1].value) d = Direction::Down;
        out.push_back({price[i].sample_index, d});
    }
    return out;
}

}  // namespace tss
