#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tss/align.hpp"
#include "tss/baseline.hpp"
#include "tss/cefd.hpp"
#include "tss/classify.hpp"
#include "tss/corpus.hpp"
#include "tss/grid.hpp"
#include "tss/lexicon.hpp"
#include "tss/regression.hpp"
#include "tss/series.hpp"

namespace tss {

// CSV/JSON builders for every artifact the CLI writes. All numbers go through
// shortest round-trip formatting and JSON keys are emitted sorted, so a rerun
// on identical inputs produces byte-identical files.

std::string tweets_csv(const std::vector<TweetBatch>& batches, const SampleGrid& grid);
std::string prices_csv(const Series& prices, const SampleGrid& grid);
std::string tss_csv(const Series& tss);
std::string corpus_csv(const FrequencyTable& table);
std::string lag_scan_csv(const LagScanReport& report);
std::string lag_scan_json(const LagScanReport& report);
std::string fit_json(const FitReport& tss_fit, const FitReport& price_fit, std::int64_t lag);
std::string baseline_json(const BaselineReport& report);
std::string baseline_samples_csv(const BaselineReport& report);
std::string regions_csv(const RegionSegmentation& segmentation);
std::string cefd_csv(const std::vector<CefdSnapshot>& snapshots);

struct ClassifyResult {
    std::int64_t lag = 0;
    double split = 0.0;  // 0 means no split: trained and evaluated on all rows
    std::int64_t n_train = 0;
    std::int64_t n_eval = 0;
    LogisticModel logistic;
    GaussianClassModel lda;
    GaussianClassModel qda;
    ConfusionReport logistic_confusion;
    ConfusionReport lda_confusion;
    ConfusionReport qda_confusion;
};

std::string models_json(const ClassifyResult& result);
std::string confusion_json(const ClassifyResult& result);

}  // namespace tss
