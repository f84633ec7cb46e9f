#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tss/series.hpp"

namespace tss {

struct Tweet {
    std::int64_t sample_index = 0;
    std::string text;

    bool operator==(const Tweet&) const = default;
};

// All tweets belonging to one time-sample slot.
struct TweetBatch {
    std::int64_t sample_index = 0;
    std::vector<Tweet> tweets;

    bool operator==(const TweetBatch&) const = default;
};

// Polarity wordlists. Entries are lowercase single tokens; the two sets are
// disjoint. The lexicon is pluggable: the repo ships a small finance-flavored
// fixture under data/ but any pair of wordlist files works.
struct Lexicon {
    std::unordered_set<std::string> positive;
    std::unordered_set<std::string> negative;
};

// One token per line; blank lines and lines starting with '#' are skipped;
// tokens are lowercased and deduplicated. A token with internal whitespace is
// an error naming the line.
std::unordered_set<std::string> load_wordlist(const std::string& path);

// Throws when a token appears in both files.
Lexicon load_lexicon(const std::string& positive_path, const std::string& negative_path);
void validate_lexicon(const Lexicon& lexicon);

// Lowercases (ASCII case fold; non-ASCII bytes kept as token characters),
// drops whitespace-delimited runs starting with "http" or "@", strips '#'
// characters, then splits on any non-alphanumeric byte. Never fails.
std::vector<std::string> tokenize(const std::string& text);

// (# tokens in positive) - (# tokens in negative); occurrences count each time.
int score_tweet(const std::vector<std::string>& tokens, const Lexicon& lexicon);
int score_tweet(const Tweet& tweet, const Lexicon& lexicon);

// Arithmetic mean of per-tweet scores; tweets without sentiment words count
// as 0. An empty batch has no mean and yields nullopt, which becomes a gap in
// the series.
std::optional<double> sample_tss(const TweetBatch& batch, const Lexicon& lexicon);

// One TSS value per non-empty batch, in batch order. `batches` must be
// ordered by sample_index.
Series score_series(const std::vector<TweetBatch>& batches, const Lexicon& lexicon);

}  // namespace tss
