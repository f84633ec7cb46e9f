#include "tss/lexicon.hpp"

#include <fstream>
#include <stdexcept>

namespace tss {

namespace {

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// token characters: ASCII alphanumerics plus any non-ASCII byte
bool is_token_char(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }

std::string lowercase(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = ascii_lower(c);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_ascii_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_ascii_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::unordered_set<std::string> load_wordlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open wordlist '" + path + "'");
    std::unordered_set<std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string token = trim(line);
        if (token.empty() || token[0] == '#') continue;
        for (char c : token) {
            if (is_ascii_space(static_cast<unsigned char>(c))) {
                throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                         ": token contains whitespace: '" + token + "'");
            }
        }
        out.insert(lowercase(token));
    }
    return out;
}

Lexicon load_lexicon(const std::string& positive_path, const std::string& negative_path) {
    Lexicon lex;
    lex.positive = load_wordlist(positive_path);
    lex.negative = load_wordlist(negative_path);
    for (const auto& w : lex.positive) {
        if (lex.negative.count(w)) {
            throw std::runtime_error("token '" + w + "' appears in both '" + positive_path +
                                     "' and '" + negative_path + "'");
        }
    }
    return lex;
}

void validate_lexicon(const Lexicon& lexicon) {
    for (const auto* set : {&lexicon.positive, &lexicon.negative}) {
        for (const auto& w : *set) {
            if (w.empty()) throw std::invalid_argument("lexicon contains an empty token");
            for (char c : w) {
                if (is_ascii_space(static_cast<unsigned char>(c))) {
                    throw std::invalid_argument("lexicon token '" + w + "' contains whitespace");
                }
                if (c >= 'A' && c <= 'Z') {
                    throw std::invalid_argument("lexicon token '" + w + "' is not lowercase");
                }
            }
        }
    }
    for (const auto& w : lexicon.positive) {
        if (lexicon.negative.count(w)) {
            throw std::invalid_argument("lexicon token '" + w + "' is both positive and negative");
        }
    }
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    const std::size_t n = text.size();
    std::size_t i = 0;
    std::string current;
    while (i < n) {
        while (i < n && is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= n) break;
        std::size_t end = i;
        while (end < n && !is_ascii_space(static_cast<unsigned char>(text[end]))) ++end;
        // whitespace-delimited run: URL and mention runs are dropped whole
        bool is_url = (end - i >= 4) && ascii_lower(text[i]) == 'h' &&
                      ascii_lower(text[i + 1]) == 't' && ascii_lower(text[i + 2]) == 't' &&
                      ascii_lower(text[i + 3]) == 'p';
        bool is_mention = text[i] == '@';
        if (!is_url && !is_mention) {
            current.clear();
            for (std::size_t j = i; j < end; ++j) {
                char c = text[j];
                if (c == '#') continue;  // hashtag word kept, marker dropped
                if (is_token_char(static_cast<unsigned char>(c))) {
                    current += ascii_lower(c);
                } else if (!current.empty()) {
                    tokens.push_back(current);
                    current.clear();
                }
            }
            if (!current.empty()) tokens.push_back(current);
        }
        i = end;
    }
    return tokens;
}

int score_tweet(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
    int score = 0;
    for (const auto& t : tokens) {
        if (lexicon.positive.count(t)) ++score;
        else if (lexicon.negative.count(t)) --score;
    }
    return score;
}

int score_tweet(const Tweet& tweet, const Lexicon& lexicon) {
    return score_tweet(tokenize(tweet.text), lexicon);
}

std::optional<double> sample_tss(const TweetBatch& batch, const Lexicon& lexicon) {
    if (batch.tweets.empty()) return std::nullopt;
    // integer sum, so the mean is exact up to one final division
    std::int64_t total = 0;
    for (const auto& tweet : batch.tweets) total += score_tweet(tweet, lexicon);
    return static_cast<double>(total) / static_cast<double>(batch.tweets.size());
}

Series score_series(const std::vector<TweetBatch>& batches, const Lexicon& lexicon) {
    Series out;
    out.reserve(batches.size());
    for (std::size_t i = 0; i < batches.size(); ++i) {
        if (i > 0 && batches[i].sample_index <= batches[i - 1].sample_index) {
            throw std::invalid_argument("score_series: batches not ordered by sample_index");
        }
        if (auto tss = sample_tss(batches[i], lexicon)) {
            out.push_back({batches[i].sample_index, *tss});
        }
    }
    return out;
}

}  // namespace tss
