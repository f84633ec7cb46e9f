#include "tss/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tss {

namespace {

// Continued fraction for the regularized incomplete beta function, evaluated
// with the modified Lentz method (Numerical Recipes style).
double ibeta_continued_fraction(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-12;
    const int max_iter = 500;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

// I_x(a, b), the regularized incomplete beta function.
double ibeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * ibeta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * ibeta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

double f_cdf(double f, int d1, int d2) {
    if (d1 < 1 || d2 < 1) {
        throw std::invalid_argument("f_cdf: degrees of freedom must be >= 1");
    }
    if (std::isnan(f) || f < 0.0) {
        throw std::invalid_argument("f_cdf: f must be >= 0");
    }
    if (f == 0.0) return 0.0;
    if (std::isinf(f)) return 1.0;
    const double x = d1 * f / (d1 * f + d2);
    return ibeta(d1 / 2.0, d2 / 2.0, x);
}

FitReport polyfit(const std::vector<double>& x, const std::vector<double>& y, int degree) {
    if (degree < 1 || degree > 12) {
        throw std::invalid_argument("polyfit: degree must be in [1, 12]");
    }
    if (x.size() != y.size()) {
        throw std::invalid_argument("polyfit: x and y lengths differ");
    }
    const std::size_t n = x.size();
    const std::size_t m = std::size_t(degree) + 1;
    if (n < m + 1) {
        throw std::invalid_argument("polyfit: need at least degree + 2 points, got " +
                                    std::to_string(n));
    }
    const auto [min_it, max_it] = std::minmax_element(x.begin(), x.end());
    if (*min_it == *max_it) {
        throw std::invalid_argument("polyfit: x values are all identical");
    }
    const double center = (*min_it + *max_it) / 2.0;
    const double half_width = (*max_it - *min_it) / 2.0;

    // design matrix in u-powers, column-major
    std::vector<double> A(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (x[i] - center) / half_width;
        double p = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            A[j * n + i] = p;
            p *= u;
        }
    }
    std::vector<double> rhs = y;

    // Householder QR: reduce A to upper-triangular, applying the same
    // reflections to the right-hand side.
    for (std::size_t j = 0; j < m; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < n; ++i) norm += A[j * n + i] * A[j * n + i];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::runtime_error("polyfit: rank-deficient design matrix");
        if (A[j * n + j] > 0.0) norm = -norm;
        // v = a_j - norm * e_j, normalized so v[j] = 1
        const double vjj = A[j * n + j] - norm;
        std::vector<double> v(n - j);
        v[0] = 1.0;
        for (std::size_t i = j + 1; i < n; ++i) v[i - j] = A[j * n + i] / vjj;
        const double beta = -vjj / norm;  // 2 / (v' v) for this scaling

        for (std::size_t col = j; col < m; ++col) {
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) dot += v[i - j] * A[col * n + i];
            dot *= beta;
            for (std::size_t i = j; i < n; ++i) A[col * n + i] -= dot * v[i - j];
        }
        double dot = 0.0;
        for (std::size_t i = j; i < n; ++i) dot += v[i - j] * rhs[i];
        dot *= beta;
        for (std::size_t i = j; i < n; ++i) rhs[i] -= dot * v[i - j];
    }

    std::vector<double> coeff(m);
    for (std::size_t j = m; j-- > 0;) {
        double s = rhs[j];
        for (std::size_t k = j + 1; k < m; ++k) s -= A[k * n + j] * coeff[k];
        const double diag = A[j * n + j];
        if (diag == 0.0) throw std::runtime_error("polyfit: singular triangular factor");
        coeff[j] = s / diag;
    }

    FitReport fit;
    fit.degree = degree;
    fit.coefficients = coeff;
    fit.center = center;
    fit.half_width = half_width;
    fit.n = std::int64_t(n);

    double mean_y = 0.0;
    for (double v : y) mean_y += v;
    mean_y /= double(n);
    double sst = 0.0, sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = evaluate(fit, x[i]);
        sse += (y[i] - pred) * (y[i] - pred);
        sst += (y[i] - mean_y) * (y[i] - mean_y);
    }
    if (sst == 0.0) {
        throw std::invalid_argument("polyfit: constant y, R^2 undefined");
    }
    fit.r_squared = 1.0 - sse / sst;

    const double df_model = double(degree);
    const double df_resid = double(n) - degree - 1.0;
    const double ssr = sst - sse;
    if (sse == 0.0) {
        fit.f_statistic = std::numeric_limits<double>::infinity();
        fit.p_value = 0.0;
    } else {
        fit.f_statistic = std::max(0.0, (ssr / df_model) / (sse / df_resid));
        // upper tail of F(d1, d2) written as I_{1-x}(d2/2, d1/2); identical to
        // 1 - f_cdf but keeps precision when the tail is tiny
        const double d1 = df_model, d2 = df_resid;
        fit.p_value = ibeta(d2 / 2.0, d1 / 2.0, d2 / (d1 * fit.f_statistic + d2));
    }
    return fit;
}

FitReport polyfit_series(const Series& series, int degree) {
    std::vector<double> x, y;
    x.reserve(series.size());
    y.reserve(series.size());
    for (const auto& p : series) {
        x.push_back(double(p.sample_index));
        y.push_back(p.value);
    }
    return polyfit(x, y, degree);
}

double evaluate(const FitReport& fit, double x) {
    const double u = (x - fit.center) / fit.half_width;
    double acc = 0.0;
    for (std::size_t j = fit.coefficients.size(); j-- > 0;) {
        acc = acc * u + fit.coefficients[j];
    }
    return acc;
}

}  // namespace tss
