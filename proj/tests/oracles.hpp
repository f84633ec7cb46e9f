#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they check: straightforward quadrature and exhaustive search, no shared
// code with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fb, double fm, double whole, double eps,
                               int depth) {
    const double m = (a + b) / 2.0;
    const double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, fm, flm);
    const double right = simpson(f, m, b, fm, fb, frm);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, fm, flm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a), fb = f(b), fm = f((a + b) / 2.0);
    const double whole = simpson(f, a, b, fa, fb, fm);
    return adaptive_simpson(f, a, b, fa, fb, fm, whole, eps, 60);
}

}  // namespace detail

// CDF of F(d1, d2) by adaptive Simpson quadrature of the Beta(a, b) density
// under the substitution t = v^2, which removes the t^(a-1) endpoint
// singularity for a = 1/2 (d1 = 1). Valid for d1 >= 1, so 2a - 1 >= 0.
inline double f_cdf_quadrature(double f, int d1, int d2, double eps = 1e-11) {
    if (f <= 0.0) return 0.0;
    const double a = d1 / 2.0, b = d2 / 2.0;
    const double x = d1 * f / (d1 * f + d2);
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    auto integrand = [&](double v) {
        // 2 v^(2a-1) (1 - v^2)^(b-1) / B(a, b)
        if (v == 0.0) return (2.0 * a - 1.0) == 0.0 ? 2.0 / std::exp(log_beta) : 0.0;
        const double log_val = std::log(2.0) + (2.0 * a - 1.0) * std::log(v) +
                               (b - 1.0) * std::log1p(-v * v) - log_beta;
        return std::exp(log_val);
    };
    return detail::integrate(integrand, 0.0, std::sqrt(x), eps);
}

// Exhaustive O(n^2) optimal-threshold search: every candidate strictly
// between two adjacent distinct values, plus one below and one above
// everything, scored by rescanning all samples.
struct ThresholdResult {
    double threshold = 0.0;
    std::int64_t correct = 0;
    std::int64_t total = 0;
};

inline ThresholdResult best_threshold_exhaustive(const std::vector<double>& values,
                                                 const std::vector<bool>& is_up) {
    if (values.size() != is_up.size() || values.empty()) {
        throw std::invalid_argument("best_threshold_exhaustive: bad input");
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<double> candidates;
    candidates.push_back(sorted.front() - 1.0);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        candidates.push_back((sorted[i] + sorted[i + 1]) / 2.0);
    }
    candidates.push_back(sorted.back() + 1.0);

    ThresholdResult best;
    best.total = std::int64_t(values.size());
    best.correct = -1;
    for (double cand : candidates) {
        std::int64_t correct = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const bool predicted_up = values[i] > cand;
            if (predicted_up == bool(is_up[i])) ++correct;
        }
        if (correct > best.correct) {
            best.correct = correct;
            best.threshold = cand;
        }
    }
    return best;
}

}  // namespace oracle
