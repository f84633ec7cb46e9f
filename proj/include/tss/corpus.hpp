#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "tss/lexicon.hpp"

namespace tss {

struct FrequencyEntry {
    std::string token;
    std::int64_t total_count = 0;      // occurrences over all batches
    std::int64_t sample_presence = 0;  // batches containing the token at least once

    bool operator==(const FrequencyEntry&) const = default;
};

// Sorted by total_count descending, ties broken by token ascending.
struct FrequencyTable {
    std::vector<FrequencyEntry> entries;
};

// Counts over tokenize() output, excluding stopwords.
FrequencyTable word_frequencies(const std::vector<TweetBatch>& batches,
                                const std::unordered_set<std::string>& stopwords);

FrequencyTable top_k(const FrequencyTable& table, std::size_t k);

// The list shipped in data/stopwords.txt, compiled in so the CLI works from
// any directory.
const std::unordered_set<std::string>& default_stopwords();

}  // namespace tss
