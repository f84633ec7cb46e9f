#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tss/cefd.hpp"
#include "tss/grid.hpp"
#include "tss/lexicon.hpp"
#include "tss/series.hpp"

namespace tss {

// Knobs for the synthetic dataset used to verify the pipeline against a
// planted ground truth. Defaults mirror the real corpus scale: 101 samples of
// 5000 tweets with the indicator leading the price by 15 slots.
struct SyntheticConfig {
    std::int64_t n_samples = 101;
    std::int64_t tweets_per_sample = 5000;
    std::int64_t planted_lag = 15;
    double noise_sigma = 0.0;
    std::uint64_t seed = 1;
};

struct SyntheticData {
    std::vector<TweetBatch> batches;
    Series prices;
};

// tweets.csv (`sample_ts,text`): rows grouped by grid slot. The returned
// batches cover every slot between the first and last populated one; slots
// without tweets come back as empty batches (gaps). Errors carry the line
// number; weekend or out-of-window timestamps are rejected by the grid.
std::vector<TweetBatch> read_tweets(const std::string& path, const SampleGrid& grid);

// prices.csv (`sample_ts,close`): sorted by sample index on return; a
// duplicated sample index is an error.
Series read_prices(const std::string& path, const SampleGrid& grid);

// funds.csv (`sample_ts,fund_id,net_value,traded_value,volume`): sorted by
// sample index (file order kept within a sample); a duplicated
// (sample index, fund_id) is an error. Multiple funds per sample are the
// normal case.
std::vector<FundRecord> read_funds(const std::string& path, const SampleGrid& grid);

// tss.csv (`sample_index,tss`), as written by the score command.
Series read_tss_csv(const std::string& path);

// Draws a latent signal s(t), composes tweet texts whose computed TSS equals
// s(t) exactly (integer word scores against the given lexicon, neutral filler
// otherwise), and builds the price as base + cumulative sum of
// sign(s(t - planted_lag) - median(s)) plus Gaussian(0, noise_sigma) level
// noise. Pure function of (cfg, lexicon): the same seed reproduces the same
// data byte for byte.
SyntheticData generate_synthetic(const SyntheticConfig& cfg, const Lexicon& lexicon);

}  // namespace tss
