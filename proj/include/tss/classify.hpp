#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tss/series.hpp"

namespace tss {

// Lag-aligned feature rows with Up/Down labels; Flat steps never make it in.
struct Dataset {
    std::size_t dim = 0;
    std::vector<std::vector<double>> features;  // n rows of dim values
    std::vector<Direction> labels;              // Up or Down, one per row
};

struct LogisticModel {
    std::vector<double> weights;  // intercept first, then one per feature
    bool converged = false;
    int iterations = 0;
};

// Gaussian generative classifier. Class 0 is Up, class 1 is Down. LDA stores
// the pooled covariance in both slots so prediction code is shared.
struct GaussianClassModel {
    enum class Kind { LDA, QDA };
    Kind kind = Kind::LDA;
    std::size_t dim = 0;
    std::array<double, 2> priors{};
    std::array<std::vector<double>, 2> means;
    std::array<std::vector<double>, 2> covariances;  // row-major dim x dim
    std::array<std::vector<double>, 2> inverses;
    std::array<double, 2> log_dets{};
};

struct ConfusionReport {
    // counts[actual][predicted], 0 = Up, 1 = Down
    std::array<std::array<std::int64_t, 2>, 2> counts{};
    std::int64_t total = 0;
    double overall_accuracy = 0.0;
    double up_accuracy = 0.0;    // recall of Up; NaN when no Up rows
    double down_accuracy = 0.0;  // recall of Down; NaN when no Down rows
};

// One row per t where tss[t] exists and the price step ending at t + lag is
// non-flat. The feature vector is [tss[t], tss[t-1], ...] of length `window`
// (default 1: the current value only); rows missing history are dropped.
// Throws when no row survives.
Dataset build_dataset(const Series& tss, const Series& price, std::int64_t lag, int window = 1);

// Ridge-penalized maximum likelihood via iteratively reweighted least squares
// (Newton steps with step-halving, so the penalized log-likelihood never
// decreases). Converged when the largest weight change drops below tol.
LogisticModel fit_logistic(const Dataset& data, int max_iter = 100, double tol = 1e-8,
                           double ridge = 1e-6);

// Class priors and means from empirical frequencies; LDA pools the covariance
// across classes, QDA estimates one per class; ridge * I is added before
// inversion. Both classes must be present with enough rows.
GaussianClassModel fit_lda(const Dataset& data, double ridge = 1e-9);
GaussianClassModel fit_qda(const Dataset& data, double ridge = 1e-9);

// Posterior-0.5 threshold; ties go Down, matching the baseline rule.
std::vector<Direction> predict(const LogisticModel& model,
                               const std::vector<std::vector<double>>& features);
std::vector<Direction> predict(const GaussianClassModel& model,
                               const std::vector<std::vector<double>>& features);

double logistic_posterior_up(const LogisticModel& model, const std::vector<double>& x);
// log posterior(Up) - log posterior(Down), up to the shared normalizer
double log_posterior_margin(const GaussianClassModel& model, const std::vector<double>& x);

// Penalized log-likelihood of a weight vector on a dataset (the quantity IRLS
// maximizes); exposed for diagnostics.
double penalized_log_likelihood(const Dataset& data, const std::vector<double>& weights,
                                double ridge);

ConfusionReport confusion(const std::vector<Direction>& predicted,
                          const std::vector<Direction>& actual);

}  // namespace tss
