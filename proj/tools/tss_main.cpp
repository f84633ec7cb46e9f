// tss: sentiment-score analytics over a 2-hour sample grid.
//
// Subcommands compose the library into the full flow: score tweets into a TSS
// series, scan indicator/price lags, fit polynomial diagnostics, evaluate the
// constant-baseline rule, train direction classifiers, and compute the
// closed-end fund premium series. `synth` generates a planted-lag dataset for
// end-to-end verification.
//
// Exit codes: 0 success, 1 user/input error, 2 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "tss/align.hpp"
#include "tss/baseline.hpp"
#include "tss/cefd.hpp"
#include "tss/classify.hpp"
#include "tss/corpus.hpp"
#include "tss/csv.hpp"
#include "tss/grid.hpp"
#include "tss/ingest.hpp"
#include "tss/lexicon.hpp"
#include "tss/regression.hpp"
#include "tss/serialize.hpp"
#include "tss/svg.hpp"

namespace {

struct GridOptions {
    std::string start = "2017-06-14T08:00:00Z";
    int slot_hours = 2;
    int slots_per_day = 5;
    bool include_weekends = false;

    tss::SampleGrid build() const {
        tss::SampleGrid grid;
        grid.start = tss::parse_timestamp(start);
        grid.slot_hours = slot_hours;
        grid.slots_per_day = slots_per_day;
        grid.skip_weekends = !include_weekends;
        grid.validate();
        return grid;
    }
};

void add_grid_options(CLI::App* cmd, GridOptions& opts) {
    cmd->add_option("--grid-start", opts.start, "Slot 0 start timestamp (ISO-8601)")
        ->capture_default_str();
    cmd->add_option("--slot-hours", opts.slot_hours, "Hours per slot")->capture_default_str();
    cmd->add_option("--slots-per-day", opts.slots_per_day, "Slots per trading day")
        ->capture_default_str();
    cmd->add_flag("--include-weekends", opts.include_weekends,
                  "Place slots on Saturdays and Sundays too");
}

void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& content) {
    std::filesystem::create_directories(out_dir);
    tss::write_file_atomic((std::filesystem::path(out_dir) / name).string(), content);
}

struct ScoreArgs {
    std::string tweets, lexicon_pos, lexicon_neg, stopwords, out_dir = ".";
    GridOptions grid;
};

void run_score(const ScoreArgs& args) {
    const tss::SampleGrid grid = args.grid.build();
    const tss::Lexicon lexicon = tss::load_lexicon(args.lexicon_pos, args.lexicon_neg);
    const auto batches = tss::read_tweets(args.tweets, grid);
    const tss::Series series = tss::score_series(batches, lexicon);
    const auto stopwords =
        args.stopwords.empty() ? tss::default_stopwords() : tss::load_wordlist(args.stopwords);
    const tss::FrequencyTable table = tss::word_frequencies(batches, stopwords);
    write_output(args.out_dir, "tss.csv", tss::tss_csv(series));
    write_output(args.out_dir, "corpus.csv", tss::corpus_csv(table));
}

struct AnalyzeArgs {
    std::string tss_path, prices, out_dir = ".";
    std::int64_t lag_min = -30, lag_max = 30;
    int degree = 9;
    std::optional<double> tss_b;
    GridOptions grid;
};

// returns the best lag so `pipeline` can feed it into classification
std::int64_t run_analyze(const AnalyzeArgs& args) {
    const tss::SampleGrid grid = args.grid.build();
    tss::Series tss_series = tss::read_tss_csv(args.tss_path);
    tss::Series price = tss::read_prices(args.prices, grid);
    tss::validate_series(price, args.prices);

    const tss::LagScanReport scan =
        tss::scan_lags(tss_series, price, args.lag_min, args.lag_max, args.tss_b);
    const std::int64_t best = scan.best_lag;

    tss::BaselineReport baseline =
        args.tss_b ? tss::evaluate_baseline(tss_series, price, best, *args.tss_b)
                   : tss::select_baseline(tss_series, price, best).second;
    const tss::RegionSegmentation regions = tss::segment_regions(baseline);

    const tss::Series shifted = tss::lag_shift(price, best);
    tss::Series tss_overlap, price_overlap;
    for (const auto& p : tss_series) {
        if (const double* v = tss::find_value(shifted, p.sample_index)) {
            tss_overlap.push_back(p);
            price_overlap.push_back({p.sample_index, *v});
        }
    }
    if (std::int64_t(tss_overlap.size()) < args.degree + 2) {
        throw std::runtime_error("insufficient overlap at lag " + std::to_string(best) +
                                 " for a degree-" + std::to_string(args.degree) + " fit (" +
                                 std::to_string(tss_overlap.size()) + " samples)");
    }
    const tss::FitReport fit_tss = tss::polyfit_series(tss_overlap, args.degree);
    const tss::FitReport fit_price = tss::polyfit_series(price_overlap, args.degree);

    tss::Series tss_curve, price_curve;
    for (const auto& p : tss_overlap) {
        tss_curve.push_back({p.sample_index, tss::evaluate(fit_tss, double(p.sample_index))});
        price_curve.push_back({p.sample_index, tss::evaluate(fit_price, double(p.sample_index))});
    }

    write_output(args.out_dir, "lag_scan.csv", tss::lag_scan_csv(scan));
    write_output(args.out_dir, "lag_scan.json", tss::lag_scan_json(scan));
    write_output(args.out_dir, "fit.json", tss::fit_json(fit_tss, fit_price, best));
    write_output(args.out_dir, "baseline.json", tss::baseline_json(baseline));
    write_output(args.out_dir, "baseline_samples.csv", tss::baseline_samples_csv(baseline));
    write_output(args.out_dir, "regions.csv", tss::regions_csv(regions));
    write_output(args.out_dir, "figure_series.svg",
                 tss::line_chart_svg("TSS and lag-shifted price",
                                     {{"tss", "#1f77b4", tss_series},
                                      {"price_shifted", "#ff7f0e", shifted}}));
    write_output(args.out_dir, "figure_fit.svg",
                 tss::line_chart_svg("Polynomial fits with baseline regions",
                                     {{"tss_fit", "#1f77b4", tss_curve},
                                      {"price_fit", "#ff7f0e", price_curve}},
                                     regions.regions, baseline.tss_b));
    return best;
}

struct ClassifyArgs {
    std::string tss_path, prices, out_dir = ".";
    std::int64_t lag = 0;
    int window = 1;
    std::optional<double> split;
    GridOptions grid;
};

void run_classify(const ClassifyArgs& args) {
    const tss::SampleGrid grid = args.grid.build();
    tss::Series tss_series = tss::read_tss_csv(args.tss_path);
    tss::Series price = tss::read_prices(args.prices, grid);

    const tss::Dataset full = tss::build_dataset(tss_series, price, args.lag, args.window);
    tss::Dataset train = full;
    tss::Dataset eval = full;
    if (args.split) {
        const double s = *args.split;
        if (!(s > 0.0 && s < 1.0)) {
            throw std::runtime_error("--split must be strictly between 0 and 1");
        }
        const std::size_t n_train = std::size_t(s * double(full.features.size()));
        if (n_train == 0 || n_train >= full.features.size()) {
            throw std::runtime_error("--split leaves an empty train or test set");
        }
        train.features.assign(full.features.begin(), full.features.begin() + n_train);
        train.labels.assign(full.labels.begin(), full.labels.begin() + n_train);
        eval.features.assign(full.features.begin() + n_train, full.features.end());
        eval.labels.assign(full.labels.begin() + n_train, full.labels.end());
    }

    tss::ClassifyResult result;
    result.lag = args.lag;
    result.split = args.split.value_or(0.0);
    result.n_train = std::int64_t(train.features.size());
    result.n_eval = std::int64_t(eval.features.size());
    result.logistic = tss::fit_logistic(train);
    result.lda = tss::fit_lda(train);
    result.qda = tss::fit_qda(train);
    result.logistic_confusion = tss::confusion(tss::predict(result.logistic, eval.features),
                                               eval.labels);
    result.lda_confusion = tss::confusion(tss::predict(result.lda, eval.features), eval.labels);
    result.qda_confusion = tss::confusion(tss::predict(result.qda, eval.features), eval.labels);

    write_output(args.out_dir, "models.json", tss::models_json(result));
    write_output(args.out_dir, "confusion.json", tss::confusion_json(result));
}

struct CefdArgs {
    std::string funds, prices, out_dir = ".";
    std::int64_t lag_min = -30, lag_max = 30;
    std::optional<double> tss_b;
    GridOptions grid;
};

void run_cefd(const CefdArgs& args) {
    const tss::SampleGrid grid = args.grid.build();
    const auto records = tss::read_funds(args.funds, grid);
    const auto snapshots = tss::cefd_snapshots(records);
    const tss::Series cefp = tss::cefp_series(snapshots);
    const tss::Series price = tss::read_prices(args.prices, grid);
    const tss::LagScanReport scan =
        tss::scan_lags(cefp, price, args.lag_min, args.lag_max, args.tss_b);
    write_output(args.out_dir, "cefp.csv", tss::cefd_csv(snapshots));
    write_output(args.out_dir, "lag_scan.csv", tss::lag_scan_csv(scan));
    write_output(args.out_dir, "lag_scan.json", tss::lag_scan_json(scan));
}

struct SynthArgs {
    std::string lexicon_pos, lexicon_neg, out_dir = ".";
    tss::SyntheticConfig cfg;
    GridOptions grid;
};

void run_synth(const SynthArgs& args) {
    const tss::SampleGrid grid = args.grid.build();
    const tss::Lexicon lexicon = tss::load_lexicon(args.lexicon_pos, args.lexicon_neg);
    const tss::SyntheticData data = tss::generate_synthetic(args.cfg, lexicon);
    write_output(args.out_dir, "tweets.csv", tss::tweets_csv(data.batches, grid));
    write_output(args.out_dir, "prices.csv", tss::prices_csv(data.prices, grid));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twitter-sentiment-score analytics for stock trend prediction"};
    app.require_subcommand(1);

    ScoreArgs score;
    CLI::App* score_cmd = app.add_subcommand("score", "Score tweets into tss.csv + corpus.csv");
    score_cmd->add_option("--tweets", score.tweets, "tweets.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    score_cmd->add_option("--lexicon-pos", score.lexicon_pos, "positive wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    score_cmd->add_option("--lexicon-neg", score.lexicon_neg, "negative wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    score_cmd->add_option("--stopwords", score.stopwords, "stopword list (default: built-in)")
        ->check(CLI::ExistingFile);
    score_cmd->add_option("--out-dir", score.out_dir, "output directory")->capture_default_str();
    add_grid_options(score_cmd, score.grid);

    AnalyzeArgs analyze;
    double analyze_tss_b = 0.0;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Lag scan, polynomial fits, baseline report");
    analyze_cmd->add_option("--tss", analyze.tss_path, "tss.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    analyze_cmd->add_option("--prices", analyze.prices, "prices.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    analyze_cmd->add_option("--lag-min", analyze.lag_min, "smallest lag to scan")
        ->capture_default_str();
    analyze_cmd->add_option("--lag-max", analyze.lag_max, "largest lag to scan")
        ->capture_default_str();
    analyze_cmd->add_option("--degree", analyze.degree, "polynomial degree (1..12)")
        ->capture_default_str();
    CLI::Option* analyze_tss_b_opt =
        analyze_cmd->add_option("--tss-b", analyze_tss_b, "fixed baseline instead of selection");
    analyze_cmd->add_option("--out-dir", analyze.out_dir, "output directory")
        ->capture_default_str();
    add_grid_options(analyze_cmd, analyze.grid);

    ClassifyArgs classify;
    double classify_split = 0.0;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Logistic/LDA/QDA direction classifiers");
    classify_cmd->add_option("--tss", classify.tss_path, "tss.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    classify_cmd->add_option("--prices", classify.prices, "prices.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    classify_cmd->add_option("--lag", classify.lag, "lag between indicator and price")
        ->capture_default_str();
    classify_cmd->add_option("--window", classify.window, "feature history length (1..3)")
        ->capture_default_str();
    CLI::Option* classify_split_opt = classify_cmd->add_option(
        "--split", classify_split, "train fraction; evaluate on the held-out suffix");
    classify_cmd->add_option("--out-dir", classify.out_dir, "output directory")
        ->capture_default_str();
    add_grid_options(classify_cmd, classify.grid);

    CefdArgs cefd;
    double cefd_tss_b = 0.0;
    CLI::App* cefd_cmd =
        app.add_subcommand("cefd", "Closed-end fund premium series and lag scan");
    cefd_cmd->add_option("--funds", cefd.funds, "funds.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    cefd_cmd->add_option("--prices", cefd.prices, "prices.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    cefd_cmd->add_option("--lag-min", cefd.lag_min, "smallest lag to scan")
        ->capture_default_str();
    cefd_cmd->add_option("--lag-max", cefd.lag_max, "largest lag to scan")
        ->capture_default_str();
    CLI::Option* cefd_tss_b_opt =
        cefd_cmd->add_option("--tss-b", cefd_tss_b, "fixed baseline instead of selection");
    cefd_cmd->add_option("--out-dir", cefd.out_dir, "output directory")->capture_default_str();
    add_grid_options(cefd_cmd, cefd.grid);

    SynthArgs synth;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a synthetic planted-lag dataset");
    synth_cmd->add_option("--lexicon-pos", synth.lexicon_pos, "positive wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    synth_cmd->add_option("--lexicon-neg", synth.lexicon_neg, "negative wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    synth_cmd->add_option("--samples", synth.cfg.n_samples, "number of time samples")
        ->capture_default_str();
    synth_cmd->add_option("--tweets-per-sample", synth.cfg.tweets_per_sample, "tweets per slot")
        ->capture_default_str();
    synth_cmd->add_option("--planted-lag", synth.cfg.planted_lag, "indicator lead in slots")
        ->capture_default_str();
    synth_cmd->add_option("--noise-sigma", synth.cfg.noise_sigma, "price level noise")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth.cfg.seed, "generator seed")->capture_default_str();
    synth_cmd->add_option("--out-dir", synth.out_dir, "output directory")->capture_default_str();
    add_grid_options(synth_cmd, synth.grid);

    ScoreArgs pipe_score;
    AnalyzeArgs pipe_analyze;
    ClassifyArgs pipe_classify;
    double pipe_tss_b = 0.0, pipe_split = 0.0;
    CLI::App* pipeline_cmd =
        app.add_subcommand("pipeline", "score, then analyze, then classify at the best lag");
    pipeline_cmd->add_option("--tweets", pipe_score.tweets, "tweets.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--prices", pipe_analyze.prices, "prices.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--lexicon-pos", pipe_score.lexicon_pos, "positive wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--lexicon-neg", pipe_score.lexicon_neg, "negative wordlist")
        ->required()
        ->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--stopwords", pipe_score.stopwords, "stopword list")
        ->check(CLI::ExistingFile);
    pipeline_cmd->add_option("--lag-min", pipe_analyze.lag_min, "smallest lag to scan")
        ->capture_default_str();
    pipeline_cmd->add_option("--lag-max", pipe_analyze.lag_max, "largest lag to scan")
        ->capture_default_str();
    pipeline_cmd->add_option("--degree", pipe_analyze.degree, "polynomial degree")
        ->capture_default_str();
    CLI::Option* pipe_tss_b_opt =
        pipeline_cmd->add_option("--tss-b", pipe_tss_b, "fixed baseline instead of selection");
    CLI::Option* pipe_split_opt = pipeline_cmd->add_option(
        "--split", pipe_split, "train fraction for classification");
    pipeline_cmd->add_option("--window", pipe_classify.window, "feature history length")
        ->capture_default_str();
    pipeline_cmd->add_option("--out-dir", pipe_score.out_dir, "output directory")
        ->capture_default_str();
    add_grid_options(pipeline_cmd, pipe_score.grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*score_cmd) run_score(score);
        if (*analyze_cmd) {
            if (*analyze_tss_b_opt) analyze.tss_b = analyze_tss_b;
            run_analyze(analyze);
        }
        if (*classify_cmd) {
            if (*classify_split_opt) classify.split = classify_split;
            run_classify(classify);
        }
        if (*cefd_cmd) {
            if (*cefd_tss_b_opt) cefd.tss_b = cefd_tss_b;
            run_cefd(cefd);
        }
        if (*synth_cmd) run_synth(synth);
        if (*pipeline_cmd) {
            pipe_analyze.grid = pipe_score.grid;
            pipe_analyze.out_dir = pipe_score.out_dir;
            if (*pipe_tss_b_opt) pipe_analyze.tss_b = pipe_tss_b;
            run_score(pipe_score);
            pipe_analyze.tss_path =
                (std::filesystem::path(pipe_score.out_dir) / "tss.csv").string();
            const std::int64_t best = run_analyze(pipe_analyze);
            pipe_classify.grid = pipe_score.grid;
            pipe_classify.out_dir = pipe_score.out_dir;
            pipe_classify.tss_path = pipe_analyze.tss_path;
            pipe_classify.prices = pipe_analyze.prices;
            pipe_classify.lag = best;
            if (*pipe_split_opt) pipe_classify.split = pipe_split;
            run_classify(pipe_classify);
        }
        return 0;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (...) {
        std::cerr << "internal error: unknown exception\n";
        return 2;
    }
}
