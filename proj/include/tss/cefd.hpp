#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tss/series.hpp"

namespace tss {

struct FundRecord {
    std::int64_t sample_index = 0;
    std::string fund_id;
    double net_value = 0.0;     // per unit, > 0
    double traded_value = 0.0;  // per unit, > 0
    double volume = 0.0;        // >= 0

    bool operator==(const FundRecord&) const = default;
};

// Discount and premium for one time sample, in percent. cefp == -cefd.
struct CefdSnapshot {
    std::int64_t sample_index = 0;
    double cefd = 0.0;
    double cefp = 0.0;
    std::int64_t n_funds = 0;
};

// (net - traded) / net * 100. Positive means the fund trades at a discount,
// negative at a premium. Throws when net_value <= 0.
double fund_discount(double net_value, double traded_value);

// Volume-weighted average discount over the funds of one sample. Zero-volume
// funds carry weight 0 but still count in n_funds. Throws on an empty record
// set, mixed sample indices, or zero total volume.
CefdSnapshot weighted_cefd(const std::vector<FundRecord>& records);

// Per-sample snapshots over records grouped by sample_index (input must be
// sorted by sample_index). Errors name the offending sample.
std::vector<CefdSnapshot> cefd_snapshots(const std::vector<FundRecord>& records);

// The CEFP values as a series on the sample grid, usable wherever a TSS
// series is.
Series cefp_series(const std::vector<CefdSnapshot>& snapshots);
Series cefp_series(const std::vector<FundRecord>& records);

}  // namespace tss
