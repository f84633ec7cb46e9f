#include "tss/cefd.hpp"

#include <stdexcept>

namespace tss {

double fund_discount(double net_value, double traded_value) {
    if (!(net_value > 0.0)) {
        throw std::invalid_argument("fund_discount: net_value must be > 0, got " +
                                    std::to_string(net_value));
    }
    return (net_value - traded_value) / net_value * 100.0;
}

CefdSnapshot weighted_cefd(const std::vector<FundRecord>& records) {
    if (records.empty()) throw std::invalid_argument("weighted_cefd: no fund records");
    const std::int64_t sample = records.front().sample_index;
    double total_volume = 0.0;
    for (const auto& r : records) {
        if (r.sample_index != sample) {
            throw std::invalid_argument("weighted_cefd: records span multiple sample indices");
        }
        if (r.volume < 0.0) {
            throw std::invalid_argument("weighted_cefd: negative volume for fund '" + r.fund_id +
                                        "'");
        }
        total_volume += r.volume;
    }
    if (!(total_volume > 0.0)) {
        throw std::invalid_argument("weighted_cefd: total volume is zero at sample_index " +
                                    std::to_string(sample));
    }
    double acc = 0.0;
    for (const auto& r : records) {
        acc += fund_discount(r.net_value, r.traded_value) * (r.volume / total_volume);
    }
    CefdSnapshot snap;
    snap.sample_index = sample;
    snap.cefd = acc;
    snap.cefp = -acc;
    snap.n_funds = std::int64_t(records.size());
    return snap;
}

std::vector<CefdSnapshot> cefd_snapshots(const std::vector<FundRecord>& records) {
    std::vector<CefdSnapshot> out;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t j = i;
        while (j < records.size() && records[j].sample_index == records[i].sample_index) ++j;
        if (i > 0 && records[i].sample_index < records[i - 1].sample_index) {
            throw std::invalid_argument("cefd_snapshots: records not sorted by sample_index");
        }
        std::vector<FundRecord> group(records.begin() + i, records.begin() + j);
        try {
            out.push_back(weighted_cefd(group));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sample_index " +
                                        std::to_string(records[i].sample_index) + ": " + e.what());
        }
        i = j;
    }
    return out;
}

Series cefp_series(const std::vector<CefdSnapshot>& snapshots) {
    Series out;
    out.reserve(snapshots.size());
    for (const auto& s : snapshots) out.push_back({s.sample_index, s.cefp});
    return out;
}

Series cefp_series(const std::vector<FundRecord>& records) {
    return cefp_series(cefd_snapshots(records));
}

}  // namespace tss
