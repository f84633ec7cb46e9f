#include "tss/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tss {

namespace {

double ratio_or_nan(std::int64_t num, std::int64_t den) {
    if (den == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Direction predict_direction(double tss, double tss_b) {
    if (!std::isfinite(tss) || !std::isfinite(tss_b)) {
        throw std::invalid_argument("predict_direction: tss and tss_b must be finite");
    }
    return tss > tss_b ? Direction::Up : Direction::Down;
}

BaselineReport evaluate_baseline(const Series& tss, const Series& price, std::int64_t lag,
                                 double tss_b) {
    if (price.size() < 2) {
        throw std::invalid_argument("evaluate_baseline: price series needs at least 2 points");
    }
    DirectionSeries steps = directions(price);

    BaselineReport report;
    report.tss_b = tss_b;
    report.lag = lag;
    for (const auto& point : tss) {
        const std::int64_t step_index = point.sample_index + lag;
        auto it = std::lower_bound(steps.begin(), steps.end(), step_index,
                                   [](const DirectionStep& s, std::int64_t idx) {
                                       return s.sample_index < idx;
                                   });
        if (it == steps.end() || it->sample_index != step_index) continue;

        BaselineSample sample;
        sample.t = point.sample_index;
        sample.tss = point.value;
        sample.predicted = predict_direction(point.value, tss_b);
        sample.actual = it->direction;
        sample.evaluated = sample.actual != Direction::Flat;
        sample.correct = sample.evaluated && sample.predicted == sample.actual;
        report.per_sample.push_back(sample);

        if (!sample.evaluated) continue;
        ++report.n_evaluated;
        if (sample.correct) ++report.n_correct;
        if (sample.actual == Direction::Up) {
            ++report.n_up;
            if (sample.correct) ++report.n_up_correct;
        } else {
            ++report.n_down;
            if (sample.correct) ++report.n_down_correct;
        }
    }
    if (report.n_evaluated == 0) {
        throw std::invalid_argument("evaluate_baseline: no evaluable (non-flat) samples at lag " +
                                    std::to_string(lag));
    }
    report.accuracy = static_cast<double>(report.n_correct) / report.n_evaluated;
    report.error_rate = 1.0 - report.accuracy;
    report.up_accuracy = ratio_or_nan(report.n_up_correct, report.n_up);
    report.down_accuracy = ratio_or_nan(report.n_down_correct, report.n_down);
    return report;
}

std::pair<double, BaselineReport> select_baseline(const Series& tss, const Series& price,
                                                  std::int64_t lag) {
    // one pass to collect the evaluable (tss, actual) pairs
    BaselineReport probe = evaluate_baseline(tss, price, lag, 0.0);
    std::vector<std::pair<double, Direction>> evaluable;
    evaluable.reserve(probe.per_sample.size());
    for (const auto& s : probe.per_sample) {
        if (s.evaluated) evaluable.push_back({s.tss, s.actual});
    }

    std::vector<double> values;
    values.reserve(evaluable.size());
    for (const auto& [v, d] : evaluable) values.push_back(v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const double lo = values.front();
    const double hi = values.back();
    const double eps = (hi > lo ? (hi - lo) : std::max(1.0, std::abs(lo))) * 1e-6;

    std::vector<double> candidates;
    candidates.reserve(values.size() + 1);
    candidates.push_back(lo - eps);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        candidates.push_back(values[i] + (values[i + 1] - values[i]) / 2.0);
    }
    candidates.push_back(hi + eps);

    double best_tss_b = candidates.front();
    std::int64_t best_correct = -1;
    for (double cand : candidates) {  // candidates ascend, so ties keep the smallest
        std::int64_t correct = 0;
        for (const auto& [v, actual] : evaluable) {
            if (predict_direction(v, cand) == actual) ++correct;
        }
        if (correct > best_correct) {
            best_correct = correct;
            best_tss_b = cand;
        }
    }
    return {best_tss_b, evaluate_baseline(tss, price, lag, best_tss_b)};
}

RegionSegmentation segment_regions(const BaselineReport& report) {
    RegionSegmentation seg;
    for (const auto& s : report.per_sample) {
        if (!s.evaluated) continue;
        if (!seg.regions.empty() && seg.regions.back().capable == s.correct) {
            seg.regions.back().end_t = s.t;
            ++seg.regions.back().n_samples;
        } else {
            seg.regions.push_back({s.t, s.t, s.correct, 1});
        }
    }
    return seg;
}

}  // namespace tss
