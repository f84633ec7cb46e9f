#include "tss/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tss {

namespace {

// Cholesky factor (lower) of a small SPD matrix, row-major. Returns false on
// a non-positive pivot.
bool cholesky(std::vector<double>& a, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i * d + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * d + k] * a[j * d + k];
            if (i == j) {
                if (s <= 0.0) return false;
                a[i * d + i] = std::sqrt(s);
            } else {
                a[i * d + j] = s / a[j * d + j];
            }
        }
        for (std::size_t j = i + 1; j < d; ++j) a[i * d + j] = 0.0;
    }
    return true;
}

// Solve L L' x = b given the Cholesky factor.
std::vector<double> cholesky_solve(const std::vector<double>& L, std::size_t d,
                                   std::vector<double> b) {
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < i; ++k) b[i] -= L[i * d + k] * b[k];
        b[i] /= L[i * d + i];
    }
    for (std::size_t i = d; i-- > 0;) {
        for (std::size_t k = i + 1; k < d; ++k) b[i] -= L[k * d + i] * b[k];
        b[i] /= L[i * d + i];
    }
    return b;
}

double log_det_from_cholesky(const std::vector<double>& L, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += std::log(L[i * d + i]);
    return 2.0 * s;
}

std::vector<double> invert_from_cholesky(const std::vector<double>& L, std::size_t d) {
    std::vector<double> inv(d * d, 0.0);
    for (std::size_t col = 0; col < d; ++col) {
        std::vector<double> e(d, 0.0);
        e[col] = 1.0;
        std::vector<double> x = cholesky_solve(L, d, std::move(e));
        for (std::size_t row = 0; row < d; ++row) inv[row * d + col] = x[row];
    }
    return inv;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// log(sigma(z)) without overflow for large |z|
double log_sigmoid(double z) {
    if (z >= 0.0) return -std::log1p(std::exp(-z));
    return z - std::log1p(std::exp(z));
}

double dot_with_intercept(const std::vector<double>& w, const std::vector<double>& x) {
    double z = w[0];
    for (std::size_t j = 0; j < x.size(); ++j) z += w[j + 1] * x[j];
    return z;
}

void check_dataset(const Dataset& data) {
    if (data.features.size() != data.labels.size()) {
        throw std::invalid_argument("dataset: feature and label counts differ");
    }
    if (data.features.empty()) throw std::invalid_argument("dataset: empty");
    for (const auto& row : data.features) {
        if (row.size() != data.dim) {
            throw std::invalid_argument("dataset: inconsistent feature dimension");
        }
        for (double v : row) {
            if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite feature");
        }
    }
    for (Direction label : data.labels) {
        if (label == Direction::Flat) {
            throw std::invalid_argument("dataset: flat labels are not allowed");
        }
    }
}

}  // namespace

Dataset build_dataset(const Series& tss, const Series& price, std::int64_t lag, int window) {
    if (window < 1 || window > 3) {
        throw std::invalid_argument("build_dataset: window must be in [1, 3]");
    }
    DirectionSeries steps;
    if (price.size() >= 2) steps = directions(price);
    Dataset data;
    data.dim = std::size_t(window);
    for (const auto& point : tss) {
        const std::int64_t step_index = point.sample_index + lag;
        auto it = std::lower_bound(steps.begin(), steps.end(), step_index,
                                   [](const DirectionStep& s, std::int64_t idx) {
                                       return s.sample_index < idx;
                                   });
        if (it == steps.end() || it->sample_index != step_index) continue;
        if (it->direction == Direction::Flat) continue;
        const Direction actual = it->direction;
        std::vector<double> row;
        row.reserve(data.dim);
        bool complete = true;
        for (int h = 0; h < window; ++h) {
            const double* v = find_value(tss, point.sample_index - h);
            if (v == nullptr) {
                complete = false;
                break;
            }
            row.push_back(*v);
        }
        if (!complete) continue;
        data.features.push_back(std::move(row));
        data.labels.push_back(actual);
    }
    if (data.features.empty()) {
        throw std::invalid_argument("build_dataset: no evaluable sample at lag " +
                                    std::to_string(lag));
    }
    return data;
}

double penalized_log_likelihood(const Dataset& data, const std::vector<double>& weights,
                                double ridge) {
    double ll = 0.0;
    for (std::size_t i = 0; i < data.features.size(); ++i) {
        const double z = dot_with_intercept(weights, data.features[i]);
        ll += data.labels[i] == Direction::Up ? log_sigmoid(z) : log_sigmoid(-z);
    }
    double penalty = 0.0;
    for (double w : weights) penalty += w * w;
    return ll - 0.5 * ridge * penalty;
}

LogisticModel fit_logistic(const Dataset& data, int max_iter, double tol, double ridge) {
    check_dataset(data);
    const std::size_t n = data.features.size();
    const std::size_t m = data.dim + 1;
    if (n < data.dim + 2) {
        throw std::invalid_argument("fit_logistic: need at least dim + 2 rows");
    }

    std::vector<double> w(m, 0.0);
    LogisticModel model;
    double ll = penalized_log_likelihood(data, w, ridge);

    for (int iter = 1; iter <= max_iter; ++iter) {
        // gradient and Hessian of the penalized log-likelihood
        std::vector<double> grad(m, 0.0);
        std::vector<double> hess(m * m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& x = data.features[i];
            const double p = sigmoid(dot_with_intercept(w, x));
            const double y = data.labels[i] == Direction::Up ? 1.0 : 0.0;
            const double r = y - p;
            const double s = p * (1.0 - p);
            grad[0] += r;
            for (std::size_t j = 0; j < data.dim; ++j) grad[j + 1] += r * x[j];
            // accumulate X' S X over the intercept-augmented row
            hess[0] += s;
            for (std::size_t j = 0; j < data.dim; ++j) {
                hess[(j + 1) * m] += s * x[j];
                hess[j + 1] += s * x[j];
                for (std::size_t k = 0; k <= j; ++k) {
                    hess[(j + 1) * m + (k + 1)] += s * x[j] * x[k];
                    if (k != j) hess[(k + 1) * m + (j + 1)] += s * x[j] * x[k];
                }
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            grad[j] -= ridge * w[j];
            hess[j * m + j] += ridge;
        }

        if (!cholesky(hess, m)) {
            throw std::runtime_error("fit_logistic: reweighted system is singular");
        }
        std::vector<double> delta = cholesky_solve(hess, m, grad);

        // step-halving keeps the penalized likelihood non-decreasing
        double scale = 1.0;
        std::vector<double> trial(m);
        double trial_ll = -std::numeric_limits<double>::infinity();
        for (int half = 0; half < 40; ++half) {
            for (std::size_t j = 0; j < m; ++j) trial[j] = w[j] + scale * delta[j];
            trial_ll = penalized_log_likelihood(data, trial, ridge);
            if (trial_ll >= ll) break;
            scale /= 2.0;
        }
        if (trial_ll < ll) break;  // no ascent direction left: stop at current w

        double max_change = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            max_change = std::max(max_change, std::abs(trial[j] - w[j]));
        }
        w = trial;
        ll = trial_ll;
        model.iterations = iter;
        if (max_change < tol) {
            model.converged = true;
            break;
        }
    }
    model.weights = w;
    return model;
}

namespace {

GaussianClassModel fit_gaussian(const Dataset& data, double ridge, GaussianClassModel::Kind kind) {
    check_dataset(data);
    const std::size_t d = data.dim;
    const std::size_t n = data.features.size();

    std::array<std::size_t, 2> counts{0, 0};
    for (Direction label : data.labels) ++counts[label == Direction::Up ? 0 : 1];
    if (counts[0] == 0 || counts[1] == 0) {
        throw std::invalid_argument("discriminant fit: both classes must be present");
    }
    if (kind == GaussianClassModel::Kind::QDA) {
        if (counts[0] < d + 1 || counts[1] < d + 1) {
            throw std::invalid_argument("fit_qda: each class needs at least dim + 1 rows");
        }
    } else if (n < d + 2) {
        throw std::invalid_argument("fit_lda: need at least dim + 2 rows in total");
    }

    GaussianClassModel model;
    model.kind = kind;
    model.dim = d;
    for (int c = 0; c < 2; ++c) {
        model.priors[c] = double(counts[c]) / double(n);
        model.means[c].assign(d, 0.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int c = data.labels[i] == Direction::Up ? 0 : 1;
        for (std::size_t j = 0; j < d; ++j) model.means[c][j] += data.features[i][j];
    }
    for (int c = 0; c < 2; ++c) {
        for (std::size_t j = 0; j < d; ++j) model.means[c][j] /= double(counts[c]);
    }

    std::array<std::vector<double>, 2> scatter;
    scatter[0].assign(d * d, 0.0);
    scatter[1].assign(d * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const int c = data.labels[i] == Direction::Up ? 0 : 1;
        for (std::size_t j = 0; j < d; ++j) {
            const double dj = data.features[i][j] - model.means[c][j];
            for (std::size_t k = 0; k < d; ++k) {
                scatter[c][j * d + k] += dj * (data.features[i][k] - model.means[c][k]);
            }
        }
    }

    for (int c = 0; c < 2; ++c) {
        std::vector<double> cov(d * d);
        if (kind == GaussianClassModel::Kind::LDA) {
            for (std::size_t e = 0; e < d * d; ++e) {
                cov[e] = (scatter[0][e] + scatter[1][e]) / double(n - 2);
            }
        } else {
            for (std::size_t e = 0; e < d * d; ++e) {
                cov[e] = scatter[c][e] / double(counts[c] - 1);
            }
        }
        model.covariances[c] = cov;
        for (std::size_t j = 0; j < d; ++j) cov[j * d + j] += ridge;
        std::vector<double> L = cov;
        if (!cholesky(L, d)) {
            throw std::runtime_error("discriminant fit: covariance not positive definite");
        }
        model.log_dets[c] = log_det_from_cholesky(L, d);
        model.inverses[c] = invert_from_cholesky(L, d);
    }
    return model;
}

}  // namespace

GaussianClassModel fit_lda(const Dataset& data, double ridge) {
    return fit_gaussian(data, ridge, GaussianClassModel::Kind::LDA);
}

GaussianClassModel fit_qda(const Dataset& data, double ridge) {
    return fit_gaussian(data, ridge, GaussianClassModel::Kind::QDA);
}

double logistic_posterior_up(const LogisticModel& model, const std::vector<double>& x) {
    if (x.size() + 1 != model.weights.size()) {
        throw std::invalid_argument("logistic predict: feature dimension mismatch");
    }
    return sigmoid(dot_with_intercept(model.weights, x));
}

double log_posterior_margin(const GaussianClassModel& model, const std::vector<double>& x) {
    if (x.size() != model.dim) {
        throw std::invalid_argument("discriminant predict: feature dimension mismatch");
    }
    std::array<double, 2> score{};
    for (int c = 0; c < 2; ++c) {
        const auto& inv = model.inverses[c];
        double quad = 0.0;
        for (std::size_t j = 0; j < model.dim; ++j) {
            const double dj = x[j] - model.means[c][j];
            for (std::size_t k = 0; k < model.dim; ++k) {
                quad += dj * inv[j * model.dim + k] * (x[k] - model.means[c][k]);
            }
        }
        score[c] = std::log(model.priors[c]) - 0.5 * model.log_dets[c] - 0.5 * quad;
    }
    return score[0] - score[1];
}

std::vector<Direction> predict(const LogisticModel& model,
                               const std::vector<std::vector<double>>& features) {
    std::vector<Direction> out;
    out.reserve(features.size());
    for (const auto& x : features) {
        out.push_back(logistic_posterior_up(model, x) > 0.5 ? Direction::Up : Direction::Down);
    }
    return out;
}

std::vector<Direction> predict(const GaussianClassModel& model,
                               const std::vector<std::vector<double>>& features) {
    std::vector<Direction> out;
    out.reserve(features.size());
    for (const auto& x : features) {
        out.push_back(log_posterior_margin(model, x) > 0.0 ? Direction::Up : Direction::Down);
    }
    return out;
}

ConfusionReport confusion(const std::vector<Direction>& predicted,
                          const std::vector<Direction>& actual) {
    if (predicted.size() != actual.size()) {
        throw std::invalid_argument("confusion: prediction and label counts differ");
    }
    if (predicted.empty()) throw std::invalid_argument("confusion: empty inputs");
    ConfusionReport report;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] == Direction::Flat || actual[i] == Direction::Flat) {
            throw std::invalid_argument("confusion: flat labels are not allowed");
        }
        const int a = actual[i] == Direction::Up ? 0 : 1;
        const int p = predicted[i] == Direction::Up ? 0 : 1;
        ++report.counts[a][p];
    }
    report.total = std::int64_t(predicted.size());
    const auto& c = report.counts;
    const std::int64_t n_up = c[0][0] + c[0][1];
    const std::int64_t n_down = c[1][0] + c[1][1];
    report.overall_accuracy = double(c[0][0] + c[1][1]) / double(report.total);
    report.up_accuracy = n_up ? double(c[0][0]) / double(n_up)
                              : std::numeric_limits<double>::quiet_NaN();
    report.down_accuracy = n_down ? double(c[1][1]) / double(n_down)
                                  : std::numeric_limits<double>::quiet_NaN();
    return report;
}

}  // namespace tss
