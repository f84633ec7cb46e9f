#include "tss/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "tss/csv.hpp"
#include "tss/random.hpp"

namespace tss {

namespace {

constexpr std::size_t kMaxTweetBytes = 4096;

std::int64_t slot_for_row(const SampleGrid& grid, const std::string& ts_field,
                          std::size_t line_no) {
    try {
        return grid.slot_index(parse_timestamp(ts_field));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
}

void require_field_count(const CsvRow& row, std::size_t want, const std::string& path) {
    if (row.fields.size() != want) {
        throw std::runtime_error(path + ": line " + std::to_string(row.line_no) + ": expected " +
                                 std::to_string(want) + " fields, got " +
                                 std::to_string(row.fields.size()));
    }
}

}  // namespace

std::vector<TweetBatch> read_tweets(const std::string& path, const SampleGrid& grid) {
    auto rows = read_csv_file(path);
    require_header(rows, {"sample_ts", "text"}, path);

    std::map<std::int64_t, std::vector<Tweet>> by_slot;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_field_count(row, 2, path);
        std::int64_t slot;
        try {
            slot = slot_for_row(grid, row.fields[0], row.line_no);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
        if (row.fields[1].size() > kMaxTweetBytes) {
            throw std::runtime_error(path + ": line " + std::to_string(row.line_no) +
                                     ": tweet text exceeds " + std::to_string(kMaxTweetBytes) +
                                     " bytes");
        }
        by_slot[slot].push_back({slot, row.fields[1]});
    }
    std::vector<TweetBatch> batches;
    if (by_slot.empty()) return batches;
    const std::int64_t lo = by_slot.begin()->first;
    const std::int64_t hi = by_slot.rbegin()->first;
    batches.reserve(std::size_t(hi - lo + 1));
    for (std::int64_t t = lo; t <= hi; ++t) {
        TweetBatch batch;
        batch.sample_index = t;
        if (auto it = by_slot.find(t); it != by_slot.end()) batch.tweets = std::move(it->second);
        batches.push_back(std::move(batch));
    }
    return batches;
}

Series read_prices(const std::string& path, const SampleGrid& grid) {
    auto rows = read_csv_file(path);
    require_header(rows, {"sample_ts", "close"}, path);
    Series series;
    series.reserve(rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_field_count(row, 2, path);
        try {
            const std::int64_t slot = slot_for_row(grid, row.fields[0], row.line_no);
            const double close = parse_double_field(row.fields[1], row.line_no, "close");
            if (!std::isfinite(close)) {
                throw std::runtime_error("line " + std::to_string(row.line_no) +
                                         ": non-finite close");
            }
            series.push_back({slot, close});
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }
    std::sort(series.begin(), series.end(), [](const SeriesPoint& a, const SeriesPoint& b) {
        return a.sample_index < b.sample_index;
    });
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].sample_index == series[i - 1].sample_index) {
            throw std::runtime_error(path + ": duplicate sample_index " +
                                     std::to_string(series[i].sample_index));
        }
    }
    return series;
}

std::vector<FundRecord> read_funds(const std::string& path, const SampleGrid& grid) {
    auto rows = read_csv_file(path);
    require_header(rows, {"sample_ts", "fund_id", "net_value", "traded_value", "volume"}, path);
    std::vector<FundRecord> records;
    records.reserve(rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_field_count(row, 5, path);
        try {
            FundRecord rec;
            rec.sample_index = slot_for_row(grid, row.fields[0], row.line_no);
            rec.fund_id = row.fields[1];
            rec.net_value = parse_double_field(row.fields[2], row.line_no, "net_value");
            rec.traded_value = parse_double_field(row.fields[3], row.line_no, "traded_value");
            rec.volume = parse_double_field(row.fields[4], row.line_no, "volume");
            if (!(rec.net_value > 0.0)) {
                throw std::runtime_error("line " + std::to_string(row.line_no) +
                                         ": net_value must be > 0");
            }
            if (!(rec.traded_value > 0.0)) {
                throw std::runtime_error("line " + std::to_string(row.line_no) +
                                         ": traded_value must be > 0");
            }
            if (rec.volume < 0.0) {
                throw std::runtime_error("line " + std::to_string(row.line_no) +
                                         ": volume must be >= 0");
            }
            records.push_back(std::move(rec));
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const FundRecord& a, const FundRecord& b) {
                         return a.sample_index < b.sample_index;
                     });
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].sample_index == records[i - 1].sample_index &&
            records[i].fund_id == records[i - 1].fund_id) {
            throw std::runtime_error(path + ": duplicate fund '" + records[i].fund_id +
                                     "' at sample_index " +
                                     std::to_string(records[i].sample_index));
        }
    }
    return records;
}

Series read_tss_csv(const std::string& path) {
    auto rows = read_csv_file(path);
    require_header(rows, {"sample_index", "tss"}, path);
    Series series;
    series.reserve(rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_field_count(row, 2, path);
        try {
            const std::int64_t idx = parse_int_field(row.fields[0], row.line_no, "sample_index");
            const double tss = parse_double_field(row.fields[1], row.line_no, "tss");
            series.push_back({idx, tss});
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }
    std::sort(series.begin(), series.end(), [](const SeriesPoint& a, const SeriesPoint& b) {
        return a.sample_index < b.sample_index;
    });
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].sample_index == series[i - 1].sample_index) {
            throw std::runtime_error(path + ": duplicate sample_index " +
                                     std::to_string(series[i].sample_index));
        }
    }
    validate_series(series, path);
    return series;
}

namespace {

// Neutral vocabulary for zero-score padding; anything that collides with the
// lexicon is filtered out before use.
const char* kFillerWords[] = {
    "market",  "shares", "index",  "london", "trading", "session", "today",
    "report",  "update", "close",  "open",   "volume",  "traders", "stocks",
    "equity",  "city",   "notes",  "watch",  "level",   "points",  "chart",
    "data",    "week",   "hour",   "moves",  "range",   "board",   "price",
};

std::vector<std::string> sorted_words(const std::unordered_set<std::string>& set) {
    std::vector<std::string> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::string compose_tweet(int score, const std::vector<std::string>& positive,
                          const std::vector<std::string>& negative,
                          const std::vector<std::string>& filler, SplitMix64& rng) {
    std::vector<const std::string*> words;
    const std::vector<std::string>& charged = score >= 0 ? positive : negative;
    for (int i = 0; i < std::abs(score); ++i) {
        words.push_back(&charged[rng.next_below(charged.size())]);
    }
    const std::size_t n_filler = 2 + rng.next_below(4);
    for (std::size_t i = 0; i < n_filler; ++i) {
        words.push_back(&filler[rng.next_below(filler.size())]);
    }
    // Fisher-Yates so charged words are not always up front
    for (std::size_t i = words.size(); i > 1; --i) {
        std::swap(words[i - 1], words[rng.next_below(i)]);
    }
    std::string text;
    text.reserve(words.size() * 8);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) text += ' ';
        text += *words[i];
    }
    return text;
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticConfig& cfg, const Lexicon& lexicon) {
    if (cfg.n_samples <= std::abs(cfg.planted_lag) + 2) {
        throw std::invalid_argument("generate_synthetic: n_samples must exceed |planted_lag| + 2");
    }
    if (cfg.tweets_per_sample < 1) {
        throw std::invalid_argument("generate_synthetic: tweets_per_sample must be >= 1");
    }
    if (!(cfg.noise_sigma >= 0.0)) {
        throw std::invalid_argument("generate_synthetic: noise_sigma must be >= 0");
    }
    if (lexicon.positive.empty() || lexicon.negative.empty()) {
        throw std::invalid_argument("generate_synthetic: lexicon needs both polarities");
    }

    const std::vector<std::string> positive = sorted_words(lexicon.positive);
    const std::vector<std::string> negative = sorted_words(lexicon.negative);
    std::vector<std::string> filler;
    for (const char* w : kFillerWords) {
        if (!lexicon.positive.count(w) && !lexicon.negative.count(w)) filler.push_back(w);
    }
    if (filler.empty()) {
        throw std::invalid_argument("generate_synthetic: lexicon swallowed the filler vocabulary");
    }

    SplitMix64 rng(cfg.seed);
    const std::int64_t n = cfg.n_samples;
    const std::int64_t m = cfg.tweets_per_sample;

    // latent signal: two incommensurate tones with random phases plus a small
    // jitter, then snapped to the 1/m lattice the tweet means live on
    const double two_pi = 6.283185307179586;
    const double phase1 = rng.next_double(0.0, two_pi);
    const double phase2 = rng.next_double(0.0, two_pi);
    std::vector<std::int64_t> totals(static_cast<std::size_t>(n));
    std::vector<double> signal(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const double phase = double(t) / double(n);
        const double raw = 0.55 * std::sin(two_pi * 4.0 * phase + phase1) +
                           0.35 * std::sin(two_pi * 9.0 * phase + phase2) +
                           0.10 * rng.next_double(-1.0, 1.0);
        totals[std::size_t(t)] = std::llround(raw * double(m));
        signal[std::size_t(t)] = double(totals[std::size_t(t)]) / double(m);
    }
    const double med = median_of(signal);

    SyntheticData data;
    data.batches.reserve(std::size_t(n));
    for (std::int64_t t = 0; t < n; ++t) {
        TweetBatch batch;
        batch.sample_index = t;
        batch.tweets.reserve(std::size_t(m));
        // spread the integer total S over m tweets: r tweets of score b+1 and
        // m - r of score b reproduce S exactly, so TSS(t) == signal[t]
        const std::int64_t S = totals[std::size_t(t)];
        std::int64_t b = S / m;
        if (S % m != 0 && S < 0) --b;
        const std::int64_t r = S - b * m;
        for (std::int64_t i = 0; i < m; ++i) {
            const int score = int(b + (i < r ? 1 : 0));
            batch.tweets.push_back({t, compose_tweet(score, positive, negative, filler, rng)});
        }
        data.batches.push_back(std::move(batch));
    }

    const double base = 7400.0;
    double cum = 0.0;
    data.prices.reserve(std::size_t(n));
    for (std::int64_t t = 0; t < n; ++t) {
        if (t >= 1) {
            const std::int64_t src = t - cfg.planted_lag;
            if (src >= 0 && src < n) {
                const double diff = signal[std::size_t(src)] - med;
                cum += diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
            }
        }
        const double noise = cfg.noise_sigma > 0.0 ? cfg.noise_sigma * rng.next_gaussian() : 0.0;
        data.prices.push_back({t, base + cum + noise});
    }
    return data;
}

}  // namespace tss
