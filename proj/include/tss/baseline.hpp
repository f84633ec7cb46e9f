#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tss/series.hpp"

namespace tss {

struct BaselineSample {
    std::int64_t t = 0;  // indicator-side sample index
    double tss = 0.0;
    Direction predicted = Direction::Down;  // Up or Down
    Direction actual = Direction::Flat;     // realized step direction at t + lag
    bool evaluated = false;                 // false when actual is Flat
    bool correct = false;                   // meaningful only when evaluated
};

// Accuracy accounting for the constant-baseline rule at one lag. Flat steps
// have no correct answer and are excluded from every denominator. Class
// accuracies are NaN when the class is absent from the evaluated set.
struct BaselineReport {
    double tss_b = 0.0;
    std::int64_t lag = 0;
    std::vector<BaselineSample> per_sample;

    std::int64_t n_evaluated = 0;
    std::int64_t n_correct = 0;
    std::int64_t n_up = 0;
    std::int64_t n_up_correct = 0;
    std::int64_t n_down = 0;
    std::int64_t n_down_correct = 0;

    double accuracy = 0.0;
    double error_rate = 0.0;  // always exactly 1 - accuracy
    double up_accuracy = 0.0;
    double down_accuracy = 0.0;
};

struct Region {
    std::int64_t start_t = 0;  // first and last evaluated sample of the run
    std::int64_t end_t = 0;
    bool capable = false;
    std::int64_t n_samples = 0;  // evaluated samples inside the run
};

// Maximal runs of consecutive evaluated samples sharing the same correctness.
struct RegionSegmentation {
    std::vector<Region> regions;
};

// Up iff tss > tss_b; the tie tss == tss_b counts as Down.
Direction predict_direction(double tss, double tss_b);

// For every t where tss[t] exists and the price step ending at t + lag exists:
// predict from tss[t] alone and compare with the realized direction.
// Throws when no sample is evaluable.
BaselineReport evaluate_baseline(const Series& tss, const Series& price, std::int64_t lag,
                                 double tss_b);

// Training-accuracy maximization over the threshold candidates: midpoints of
// consecutive distinct evaluable TSS values plus the extremes -/+ epsilon.
// Ties resolve to the smallest candidate.
std::pair<double, BaselineReport> select_baseline(const Series& tss, const Series& price,
                                                  std::int64_t lag);

RegionSegmentation segment_regions(const BaselineReport& report);

}  // namespace tss
