#pragma once

#include <cstdint>
#include <vector>

#include "tss/series.hpp"

namespace tss {

// Polynomial least-squares fit against time with the usual OLS diagnostics.
// Coefficients live in normalized-x space u = (x - center) / half_width, in
// ascending power order; predictions and diagnostics are what matter
// downstream, not raw-space coefficients.
struct FitReport {
    int degree = 0;
    std::vector<double> coefficients;  // size degree + 1
    double center = 0.0;
    double half_width = 1.0;
    double r_squared = 0.0;
    double f_statistic = 0.0;  // +infinity when the fit is exact (SSE == 0)
    double p_value = 1.0;
    std::int64_t n = 0;
};

// Degree must be in [1, 12] and len(x) = len(y) >= degree + 2. x is mapped to
// [-1, 1] before building the design matrix (a raw degree-9 Vandermonde over
// 0..100 is hopeless), and the system is solved by Householder QR rather than
// normal equations. Throws on too few points, constant x, or SST == 0.
FitReport polyfit(const std::vector<double>& x, const std::vector<double>& y, int degree);

// Convenience: x = sample_index, y = value; gaps simply contribute no row.
FitReport polyfit_series(const Series& series, int degree);

// Fitted polynomial at raw-space x (Horner on the normalized coordinate);
// extrapolation beyond [center - half_width, center + half_width] is allowed.
double evaluate(const FitReport& fit, double x);

// CDF of the F(d1, d2) distribution via the regularized incomplete beta
// function I_x(d1/2, d2/2) at x = d1 f / (d1 f + d2). Continued-fraction
// (Lentz) evaluation with the symmetry switch at x > (a+1)/(a+b+2);
// tolerance 1e-12, 500 iteration cap. Throws on d1 < 1, d2 < 1 or f < 0.
double f_cdf(double f, int d1, int d2);

}  // namespace tss
