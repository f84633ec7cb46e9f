#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tss/cefd.hpp"
#include "tss/random.hpp"

using namespace tss;

TEST_CASE("fund_discount substitutes directly") {
    CHECK(fund_discount(100.0, 90.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(fund_discount(50.0, 50.0) == 0.0);
    CHECK(fund_discount(100.0, 110.0) == doctest::Approx(-10.0).epsilon(1e-15));  // premium
    CHECK_THROWS_AS(fund_discount(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(fund_discount(-5.0, 10.0), std::invalid_argument);
}

TEST_CASE("weighted_cefd basic cases") {
    // equal discounts collapse to that discount for any volumes
    std::vector<FundRecord> equal = {{0, "a", 100, 90, 1.0}, {0, "b", 200, 180, 7.0}};
    CHECK(weighted_cefd(equal).cefd == doctest::Approx(10.0).epsilon(1e-15));

    // (d=10%, vol=1) and (d=20%, vol=3) -> 17.5%
    std::vector<FundRecord> mixed = {{0, "a", 100, 90, 1.0}, {0, "b", 100, 80, 3.0}};
    CefdSnapshot snap = weighted_cefd(mixed);
    CHECK(snap.cefd == doctest::Approx(17.5).epsilon(1e-15));
    CHECK(snap.cefp == -snap.cefd);  // bit-exact negation
    CHECK(snap.n_funds == 2);

    // single fund is its own discount
    std::vector<FundRecord> single = {{3, "x", 80, 100, 2.0}};
    CHECK(weighted_cefd(single).cefd == doctest::Approx(-25.0).epsilon(1e-15));
}

TEST_CASE("weighted_cefd error paths") {
    CHECK_THROWS_AS(weighted_cefd({}), std::invalid_argument);
    std::vector<FundRecord> zero_vol = {{0, "a", 100, 90, 0.0}, {0, "b", 100, 80, 0.0}};
    CHECK_THROWS_AS(weighted_cefd(zero_vol), std::invalid_argument);
    std::vector<FundRecord> mixed_sample = {{0, "a", 100, 90, 1.0}, {1, "b", 100, 80, 1.0}};
    CHECK_THROWS_AS(weighted_cefd(mixed_sample), std::invalid_argument);
}

TEST_CASE("zero-volume funds count in n_funds but not in the average") {
    std::vector<FundRecord> records = {{0, "a", 100, 90, 4.0}, {0, "b", 100, 10, 0.0}};
    CefdSnapshot snap = weighted_cefd(records);
    CHECK(snap.cefd == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(snap.n_funds == 2);
}

TEST_CASE("weighted_cefd invariants on random fixtures") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_below(12);
        std::vector<FundRecord> records;
        double lo = 1e300, hi = -1e300;
        for (std::size_t i = 0; i < n; ++i) {
            FundRecord r;
            r.sample_index = 9;
            r.fund_id = "f" + std::to_string(i);
            r.net_value = rng.next_double(10.0, 200.0);
            r.traded_value = rng.next_double(10.0, 200.0);
            r.volume = (i == 0) ? rng.next_double(0.1, 5.0) : rng.next_double(0.0, 5.0);
            records.push_back(r);
            const double d = fund_discount(r.net_value, r.traded_value);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        CefdSnapshot snap = weighted_cefd(records);
        const double tol = 1e-12 * (std::abs(lo) + std::abs(hi) + 1.0);
        CHECK(snap.cefd >= lo - tol);  // convex combination
        CHECK(snap.cefd <= hi + tol);

        // scaling all volumes leaves the weighted mean unchanged
        const double scale = rng.next_double(0.25, 8.0);
        std::vector<FundRecord> scaled = records;
        for (auto& r : scaled) r.volume *= scale;
        CHECK(weighted_cefd(scaled).cefd == doctest::Approx(snap.cefd).epsilon(1e-12));

        // splitting one fund into two with the same discount preserves the mean
        std::vector<FundRecord> split = records;
        FundRecord half = split[0];
        half.fund_id += "_b";
        half.volume = split[0].volume * 0.25;
        split[0].volume *= 0.75;
        split.push_back(half);
        CHECK(weighted_cefd(split).cefd == doctest::Approx(snap.cefd).epsilon(1e-12));
    }
}

TEST_CASE("cefd_snapshots groups by sample and names the offender on error") {
    std::vector<FundRecord> records = {
        {0, "a", 100, 95, 1.0},
        {0, "b", 100, 85, 1.0},
        {2, "a", 100, 120, 2.0},
        {5, "a", 100, 100, 3.0},
    };
    auto snaps = cefd_snapshots(records);
    REQUIRE(snaps.size() == 3);
    CHECK(snaps[0].sample_index == 0);
    CHECK(snaps[0].cefd == doctest::Approx(10.0).epsilon(1e-15));  // mean of 5 and 15
    CHECK(snaps[1].sample_index == 2);
    CHECK(snaps[1].cefd == doctest::Approx(-20.0).epsilon(1e-15));
    CHECK(snaps[2].cefd == 0.0);

    Series cefp = cefp_series(records);
    REQUIRE(cefp.size() == 3);
    CHECK(cefp[0] == SeriesPoint{0, -snaps[0].cefd});
    CHECK(cefp[1].value == doctest::Approx(20.0).epsilon(1e-15));

    std::vector<FundRecord> bad = {{4, "a", 100, 95, 0.0}};
    CHECK_THROWS_WITH_AS(cefd_snapshots(bad), doctest::Contains("sample_index 4"),
                         std::invalid_argument);
}

TEST_CASE("hand-built 3-sample fixture matches hand arithmetic") {
    // sample 0: discounts 10 (vol 1), 20 (vol 3) -> 17.5 ; cefp -17.5
    // sample 1: discounts -5 (vol 2), 5 (vol 2) -> 0
    // sample 2: discount 4 alone
    std::vector<FundRecord> records = {
        {0, "a", 100, 90, 1.0},  {0, "b", 100, 80, 3.0}, {1, "a", 100, 105, 2.0},
        {1, "b", 100, 95, 2.0},  {2, "c", 100, 96, 9.0},
    };
    Series cefp = cefp_series(records);
    REQUIRE(cefp.size() == 3);
    CHECK(cefp[0].value == doctest::Approx(-17.5).epsilon(1e-12));
    CHECK(cefp[1].value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cefp[2].value == doctest::Approx(-4.0).epsilon(1e-12));
}
