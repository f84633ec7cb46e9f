#include "tss/align.hpp"

#include <cmath>
#include <stdexcept>

#include "tss/baseline.hpp"

namespace tss {

Series lag_shift(const Series& series, std::int64_t k) {
    if (series.empty()) return {};
    const std::int64_t lo = series.front().sample_index;
    const std::int64_t hi = series.back().sample_index;
    Series out;
    out.reserve(series.size());
    for (const auto& p : series) {
        const std::int64_t shifted = p.sample_index - k;
        if (shifted < lo || shifted > hi) continue;
        out.push_back({shifted, p.value});
    }
    return out;
}

LagPairing pair_at_lag(const Series& indicator, const Series& price, std::int64_t k) {
    LagPairing out;
    out.lag = k;
    out.pairs.reserve(std::min(indicator.size(), price.size()));
    for (const auto& p : indicator) {
        if (const double* v = find_value(price, p.sample_index + k)) {
            out.pairs.push_back({p.value, *v});
        }
    }
    return out;
}

double pearson_r(const std::vector<LagPair>& pairs) {
    const std::size_t n = pairs.size();
    if (n < 2) throw std::invalid_argument("pearson_r: need at least 2 pairs");
    double mean_a = 0.0, mean_b = 0.0;
    for (const auto& p : pairs) {
        mean_a += p.indicator;
        mean_b += p.price;
    }
    mean_a /= double(n);
    mean_b /= double(n);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (const auto& p : pairs) {
        const double da = p.indicator - mean_a;
        const double db = p.price - mean_b;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        throw std::invalid_argument("pearson_r: correlation undefined for a constant side");
    }
    double r = sab / std::sqrt(saa * sbb);
    // guard against rounding just past +/-1
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

LagScanReport scan_lags(const Series& indicator, const Series& price, std::int64_t k_min,
                        std::int64_t k_max, std::optional<double> fixed_tss_b) {
    if (k_min > k_max) throw std::invalid_argument("scan_lags: empty lag range");
    LagScanReport report;
    report.per_lag.reserve(std::size_t(k_max - k_min + 1));

    bool have_best = false;
    double best_accuracy = 0.0;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        LagMetrics metrics;
        metrics.lag = k;
        LagPairing pairing = pair_at_lag(indicator, price, k);
        metrics.n_pairs = std::int64_t(pairing.pairs.size());
        if (metrics.n_pairs >= 3) {
            try {
                metrics.pearson_r = pearson_r(pairing.pairs);
            } catch (const std::invalid_argument&) {
                // constant side: correlation stays absent
            }
            try {
                if (fixed_tss_b) {
                    metrics.baseline_accuracy =
                        evaluate_baseline(indicator, price, k, *fixed_tss_b).accuracy;
                } else {
                    metrics.baseline_accuracy = select_baseline(indicator, price, k).second.accuracy;
                }
            } catch (const std::invalid_argument&) {
                // no evaluable step at this lag: accuracy stays absent
            }
        }
        if (metrics.baseline_accuracy) {
            const double acc = *metrics.baseline_accuracy;
            bool better = !have_best || acc > best_accuracy;
            if (!better && acc == best_accuracy) {
                const std::int64_t b = report.best_lag;
                better = std::abs(k) < std::abs(b) || (std::abs(k) == std::abs(b) && k < b);
            }
            if (better) {
                have_best = true;
                best_accuracy = acc;
                report.best_lag = k;
            }
        }
        report.per_lag.push_back(metrics);
    }
    if (!have_best) {
        throw std::invalid_argument("scan_lags: no lag in [" + std::to_string(k_min) + ", " +
                                    std::to_string(k_max) + "] has an evaluable baseline");
    }
    return report;
}

}  // namespace tss
