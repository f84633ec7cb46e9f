#include "tss/corpus.hpp"

#include <algorithm>
#include <map>

namespace tss {

FrequencyTable word_frequencies(const std::vector<TweetBatch>& batches,
                                const std::unordered_set<std::string>& stopwords) {
    struct Tally {
        std::int64_t total = 0;
        std::int64_t presence = 0;
        std::int64_t last_batch = -1;
    };
    // std::map keeps tokens ordered, which makes the tie-break sort stable work
    std::map<std::string, Tally> tallies;
    for (std::int64_t b = 0; b < std::int64_t(batches.size()); ++b) {
        for (const auto& tweet : batches[b].tweets) {
            for (auto& token : tokenize(tweet.text)) {
                if (stopwords.count(token)) continue;
                Tally& t = tallies[token];
                ++t.total;
                if (t.last_batch != b) {
                    ++t.presence;
                    t.last_batch = b;
                }
            }
        }
    }
    FrequencyTable table;
    table.entries.reserve(tallies.size());
    for (auto& [token, t] : tallies) {
        table.entries.push_back({token, t.total, t.presence});
    }
    // entries arrive token-ascending, so a stable sort by count leaves ties alphabetical
    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const FrequencyEntry& a, const FrequencyEntry& b) {
                         return a.total_count > b.total_count;
                     });
    return table;
}

FrequencyTable top_k(const FrequencyTable& table, std::size_t k) {
    FrequencyTable out;
    out.entries.assign(table.entries.begin(),
                       table.entries.begin() + std::min(k, table.entries.size()));
    return out;
}

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",       "about",   "above",  "after",   "again",  "all",    "am",     "an",
        "and",     "any",     "are",    "as",      "at",     "be",     "because", "been",
        "before",  "being",   "below",  "between", "both",   "but",    "by",     "can",
        "cannot",  "could",   "did",    "do",      "does",   "doing",  "down",   "during",
        "each",    "few",     "for",    "from",    "further", "had",   "has",    "have",
        "having",  "he",      "her",    "here",    "hers",   "him",    "his",    "how",
        "i",       "if",      "in",     "into",    "is",     "it",     "its",    "itself",
        "just",    "me",      "more",   "most",    "my",     "no",     "nor",    "not",
        "now",     "of",      "off",    "on",      "once",   "only",   "or",     "other",
        "our",     "ours",    "out",    "over",    "own",    "rt",     "same",   "she",
        "should",  "so",      "some",   "such",    "than",   "that",   "the",    "their",
        "theirs",  "them",    "then",   "there",   "these",  "they",   "this",   "those",
        "through", "to",      "too",    "under",   "until",  "up",     "very",   "was",
        "we",      "were",    "what",   "when",    "where",  "which",  "while",  "who",
        "whom",    "why",     "will",   "with",    "would",  "you",    "your",   "yours",
    };
    return words;
}

}  // namespace tss
