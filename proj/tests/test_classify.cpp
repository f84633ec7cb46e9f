#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tss/classify.hpp"
#include "tss/random.hpp"

using namespace tss;

namespace {

Series series_of(const std::vector<double>& values, std::int64_t start = 0) {
    Series s;
    for (std::size_t i = 0; i < values.size(); ++i) s.push_back({start + std::int64_t(i), values[i]});
    return s;
}

// steps[i] in {+1, 0, -1} becomes the step ending at index i+1
Series price_from_steps(const std::vector<int>& steps) {
    Series price;
    double level = 50.0;
    price.push_back({0, level});
    for (std::size_t i = 0; i < steps.size(); ++i) {
        level += steps[i];
        price.push_back({std::int64_t(i) + 1, level});
    }
    return price;
}

Dataset two_gaussians(SplitMix64& rng, std::size_t per_class, double mean, double sigma) {
    Dataset data;
    data.dim = 1;
    for (std::size_t i = 0; i < per_class; ++i) {
        data.features.push_back({mean + sigma * rng.next_gaussian()});
        data.labels.push_back(Direction::Up);
        data.features.push_back({-mean + sigma * rng.next_gaussian()});
        data.labels.push_back(Direction::Down);
    }
    return data;
}

}  // namespace

TEST_CASE("build_dataset rows follow the lag-aligned non-flat steps") {
    Series tss = series_of({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
    // steps ending at 1..11; index 5 is flat, so t = 3 drops out at lag 2
    Series price = price_from_steps({1, 1, -1, 1, 0, -1, 1, 1, -1, 1, 1});
    Dataset data = build_dataset(tss, price, 2);
    REQUIRE(data.features.size() == 9);
    CHECK(data.dim == 1);
    CHECK(data.features[0] == std::vector<double>{0.1});  // t=0 -> step 2 (up)
    CHECK(data.labels[0] == Direction::Up);
    CHECK(data.labels[1] == Direction::Down);  // t=1 -> step 3
    // t=3 (flat step 5) was dropped; next row is t=4 -> step 6 (down)
    CHECK(data.features[3] == std::vector<double>{0.5});
    CHECK(data.labels[3] == Direction::Down);

    Dataset windowed = build_dataset(tss, price, 2, 2);
    REQUIRE(windowed.features.size() == 8);  // t=0 lacks tss[-1]
    CHECK(windowed.dim == 2);
    CHECK(windowed.features[0] == std::vector<double>{0.2, 0.1});
}

TEST_CASE("build_dataset error paths") {
    Series tss = series_of({0.1, 0.2, 0.3});
    Series flat = price_from_steps({0, 0, 0});
    CHECK_THROWS_AS(build_dataset(tss, flat, 0), std::invalid_argument);
    Series price = price_from_steps({1, -1, 1});
    CHECK_THROWS_AS(build_dataset(tss, price, 100), std::invalid_argument);  // no overlap
    CHECK_THROWS_AS(build_dataset(tss, price, 0, 7), std::invalid_argument);  // bad window
}

TEST_CASE("logistic separates a separable 1-D fixture") {
    Dataset data;
    data.dim = 1;
    for (double x : {-2.0, -1.5, -1.0, -0.7}) {
        data.features.push_back({x});
        data.labels.push_back(Direction::Down);
    }
    for (double x : {0.7, 1.0, 1.5, 2.0}) {
        data.features.push_back({x});
        data.labels.push_back(Direction::Up);
    }
    LogisticModel model = fit_logistic(data);
    CHECK(model.converged);
    for (double w : model.weights) CHECK(std::isfinite(w));
    auto predictions = predict(model, data.features);
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        CHECK(predictions[i] == data.labels[i]);  // training accuracy 1.0
    }
}

TEST_CASE("logistic on a constant feature predicts the majority class") {
    Dataset data;
    data.dim = 1;
    for (int i = 0; i < 7; ++i) {
        data.features.push_back({3.0});
        data.labels.push_back(Direction::Up);
    }
    for (int i = 0; i < 3; ++i) {
        data.features.push_back({3.0});
        data.labels.push_back(Direction::Down);
    }
    LogisticModel model = fit_logistic(data);
    auto predictions = predict(model, data.features);
    for (auto p : predictions) CHECK(p == Direction::Up);
    CHECK(logistic_posterior_up(model, {3.0}) == doctest::Approx(0.7).epsilon(1e-3));
}

TEST_CASE("penalized log-likelihood is nondecreasing across IRLS iterations") {
    SplitMix64 rng(404);
    Dataset data = two_gaussians(rng, 60, 0.7, 1.0);
    double prev = penalized_log_likelihood(data, std::vector<double>(2, 0.0), 1e-6);
    for (int iters = 1; iters <= 8; ++iters) {
        LogisticModel model = fit_logistic(data, iters, 0.0, 1e-6);  // tol 0: run all iters
        const double ll = penalized_log_likelihood(data, model.weights, 1e-6);
        CHECK(ll >= prev - 1e-12);
        prev = ll;
    }
}

TEST_CASE("lda and qda place the symmetric boundary at zero") {
    Dataset data;
    data.dim = 1;
    for (double h : {0.5, 1.0, 1.5}) {
        data.features.push_back({1.0 + h});
        data.labels.push_back(Direction::Up);
        data.features.push_back({1.0 - h});
        data.labels.push_back(Direction::Up);
        data.features.push_back({-1.0 + h});
        data.labels.push_back(Direction::Down);
        data.features.push_back({-1.0 - h});
        data.labels.push_back(Direction::Down);
    }
    for (auto model : {fit_lda(data), fit_qda(data)}) {
        CHECK(predict(model, {{0.05}})[0] == Direction::Up);
        CHECK(predict(model, {{-0.05}})[0] == Direction::Down);
        CHECK(std::abs(log_posterior_margin(model, {0.0})) < 1e-9);
    }
}

TEST_CASE("equal empirical covariances collapse qda onto lda") {
    // equal class sizes with mirrored offsets force identical per-class and
    // pooled variances, so the two models coincide
    Dataset data;
    data.dim = 1;
    const double h = 0.8;
    for (int i = 0; i < 5; ++i) {
        data.features.push_back({2.0 + h});
        data.labels.push_back(Direction::Up);
        data.features.push_back({2.0 - h});
        data.labels.push_back(Direction::Up);
        data.features.push_back({-0.5 + h});
        data.labels.push_back(Direction::Down);
        data.features.push_back({-0.5 - h});
        data.labels.push_back(Direction::Down);
    }
    GaussianClassModel lda = fit_lda(data);
    GaussianClassModel qda = fit_qda(data);
    CHECK(lda.covariances[0][0] == doctest::Approx(qda.covariances[0][0]).epsilon(1e-14));
    for (double x = -3.0; x <= 4.0; x += 0.1) {
        CHECK(predict(lda, {{x}})[0] == predict(qda, {{x}})[0]);
        CHECK(log_posterior_margin(lda, {x}) ==
              doctest::Approx(log_posterior_margin(qda, {x})).epsilon(1e-9));
    }
}

TEST_CASE("unequal priors shift the lda boundary by ln(9)/2 toward the rare class") {
    // 90 Up at mean +1, 10 Down at mean -1, pooled variance exactly 1:
    // 50 mirrored pairs contribute SS = 100 * 0.98 = 98 over n - 2 = 98 dof
    Dataset data;
    data.dim = 1;
    const double delta = std::sqrt(0.98);
    for (int i = 0; i < 45; ++i) {
        data.features.push_back({1.0 + delta});
        data.labels.push_back(Direction::Up);
        data.features.push_back({1.0 - delta});
        data.labels.push_back(Direction::Up);
    }
    for (int i = 0; i < 5; ++i) {
        data.features.push_back({-1.0 + delta});
        data.labels.push_back(Direction::Down);
        data.features.push_back({-1.0 - delta});
        data.labels.push_back(Direction::Down);
    }
    GaussianClassModel lda = fit_lda(data);
    CHECK(lda.priors[0] == 0.9);
    CHECK(lda.covariances[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    const double boundary = -std::log(9.0) / 2.0;  // -1.0986...
    CHECK(predict(lda, {{boundary + 1e-6}})[0] == Direction::Up);
    CHECK(predict(lda, {{boundary - 1e-6}})[0] == Direction::Down);
}

TEST_CASE("lda and qda predictions are affine invariant") {
    SplitMix64 rng(777);
    Dataset data;
    data.dim = 2;
    for (int i = 0; i < 120; ++i) {
        const bool up = i % 2 == 0;
        const double cx = up ? 1.0 : -1.0;
        const double cy = up ? 0.5 : -0.25;
        data.features.push_back({cx + rng.next_gaussian(), cy + 0.8 * rng.next_gaussian()});
        data.labels.push_back(up ? Direction::Up : Direction::Down);
    }
    // invertible affine map: x' = A x + b
    const double A[2][2] = {{1.7, -0.6}, {0.4, 2.2}};
    const double b[2] = {3.0, -1.5};
    Dataset mapped = data;
    for (auto& row : mapped.features) {
        const double x0 = row[0], x1 = row[1];
        row[0] = A[0][0] * x0 + A[0][1] * x1 + b[0];
        row[1] = A[1][0] * x0 + A[1][1] * x1 + b[1];
    }
    for (bool quadratic : {false, true}) {
        GaussianClassModel orig = quadratic ? fit_qda(data) : fit_lda(data);
        GaussianClassModel trans = quadratic ? fit_qda(mapped) : fit_lda(mapped);
        for (std::size_t i = 0; i < data.features.size(); ++i) {
            const double margin = log_posterior_margin(orig, data.features[i]);
            if (std::abs(margin) <= 1e-6) continue;
            CHECK(predict(orig, {data.features[i]})[0] ==
                  predict(trans, {mapped.features[i]})[0]);
            // ridge adds ~1e-9-scale absolute noise to the transformed margin
            CHECK(std::abs(log_posterior_margin(trans, mapped.features[i]) - margin) <=
                  1e-7 * (1.0 + std::abs(margin)));
        }
    }
}

TEST_CASE("lda and qda agree asymptotically under a shared covariance") {
    SplitMix64 rng(2020);
    Dataset data = two_gaussians(rng, 1000, 1.0, 1.0);  // n = 2000
    GaussianClassModel lda = fit_lda(data);
    GaussianClassModel qda = fit_qda(data);
    std::int64_t disagreements = 0;
    for (const auto& row : data.features) {
        if (predict(lda, {row})[0] != predict(qda, {row})[0]) ++disagreements;
    }
    CHECK(double(disagreements) / double(data.features.size()) < 0.02);
}

TEST_CASE("discriminant fitting rejects degenerate inputs") {
    Dataset single;
    single.dim = 1;
    for (int i = 0; i < 6; ++i) {
        single.features.push_back({double(i)});
        single.labels.push_back(Direction::Up);
    }
    CHECK_THROWS_AS(fit_lda(single), std::invalid_argument);
    CHECK_THROWS_AS(fit_qda(single), std::invalid_argument);

    Dataset tiny;
    tiny.dim = 2;
    tiny.features = {{0.0, 1.0}, {1.0, 0.0}, {2.0, 2.0}};
    tiny.labels = {Direction::Up, Direction::Down, Direction::Up};
    CHECK_THROWS_AS(fit_qda(tiny), std::invalid_argument);  // class counts < d + 1
}

TEST_CASE("predict validates the feature dimension") {
    Dataset data;
    data.dim = 1;
    for (int i = 0; i < 4; ++i) {
        data.features.push_back({double(i)});
        data.labels.push_back(i < 2 ? Direction::Down : Direction::Up);
    }
    LogisticModel logistic = fit_logistic(data);
    CHECK_THROWS_AS(predict(logistic, {{1.0, 2.0}}), std::invalid_argument);
    GaussianClassModel lda = fit_lda(data);
    CHECK_THROWS_AS(predict(lda, {{1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("confusion report identities") {
    std::vector<Direction> actual = {Direction::Up, Direction::Up, Direction::Down,
                                     Direction::Down, Direction::Up};
    CHECK_THROWS_AS(confusion({Direction::Up}, actual), std::invalid_argument);

    ConfusionReport perfect = confusion(actual, actual);
    CHECK(perfect.overall_accuracy == 1.0);
    CHECK(perfect.up_accuracy == 1.0);
    CHECK(perfect.down_accuracy == 1.0);
    CHECK(perfect.counts[0][1] == 0);
    CHECK(perfect.counts[1][0] == 0);

    std::vector<Direction> predicted = {Direction::Up, Direction::Down, Direction::Down,
                                        Direction::Up, Direction::Up};
    ConfusionReport mixed = confusion(predicted, actual);
    CHECK(mixed.total == 5);
    CHECK(mixed.counts[0][0] + mixed.counts[0][1] == 3);  // row sums = class counts
    CHECK(mixed.counts[1][0] + mixed.counts[1][1] == 2);
    CHECK(mixed.overall_accuracy == doctest::Approx(3.0 / 5.0).epsilon(1e-15));
    // overall = (n_up * up_acc + n_down * down_acc) / n
    CHECK(mixed.overall_accuracy ==
          doctest::Approx((3.0 * mixed.up_accuracy + 2.0 * mixed.down_accuracy) / 5.0)
              .epsilon(1e-15));
}
