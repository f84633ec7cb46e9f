#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tss/series.hpp"

namespace tss {

struct LagPair {
    double indicator = 0.0;
    double price = 0.0;

    bool operator==(const LagPair&) const = default;
};

struct LagPairing {
    std::int64_t lag = 0;
    std::vector<LagPair> pairs;
};

// Per-lag metrics; nullopt marks a metric that is undefined at that lag
// (too little overlap, constant side, no non-flat step).
struct LagMetrics {
    std::int64_t lag = 0;
    std::optional<double> pearson_r;
    std::optional<double> baseline_accuracy;
    std::int64_t n_pairs = 0;
};

struct LagScanReport {
    std::vector<LagMetrics> per_lag;
    std::int64_t best_lag = 0;
};

// The value at index t moves to index t - k; shifted indices outside the
// original series' index range are dropped.
Series lag_shift(const Series& series, std::int64_t k);

// Pairs (indicator[t], price[t + k]) over every t where both sides exist.
LagPairing pair_at_lag(const Series& indicator, const Series& price, std::int64_t k);

// Standard Pearson correlation; throws on fewer than two pairs or a constant
// side.
double pearson_r(const std::vector<LagPair>& pairs);

// Evaluates every lag in [k_min, k_max]: correlation over pair_at_lag plus
// baseline accuracy, with tss_b either fixed or re-selected per lag
// (fixed_tss_b == nullopt). Lags with fewer than 3 pairs report absent
// metrics. best_lag maximizes baseline accuracy; ties prefer smaller |k|,
// then smaller k. Throws on an empty range or when no lag is evaluable.
LagScanReport scan_lags(const Series& indicator, const Series& price, std::int64_t k_min,
                        std::int64_t k_max, std::optional<double> fixed_tss_b = std::nullopt);

}  // namespace tss
