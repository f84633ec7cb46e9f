#include "tss/serialize.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "tss/csv.hpp"

namespace tss {

namespace {

using nlohmann::json;

// NaN (absent class, absent metric) must not leak into JSON as literal nan
json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

json fit_report_json(const FitReport& fit) {
    json j;
    j["degree"] = fit.degree;
    j["coefficients"] = fit.coefficients;
    j["center"] = fit.center;
    j["half_width"] = fit.half_width;
    j["r_squared"] = fit.r_squared;
    if (std::isinf(fit.f_statistic)) {
        j["f_statistic"] = "inf";
    } else {
        j["f_statistic"] = fit.f_statistic;
    }
    j["p_value"] = fit.p_value;
    j["n"] = fit.n;
    return j;
}

json confusion_report_json(const ConfusionReport& report) {
    json j;
    j["counts"] = {{"up_up", report.counts[0][0]},
                   {"up_down", report.counts[0][1]},
                   {"down_up", report.counts[1][0]},
                   {"down_down", report.counts[1][1]}};
    j["total"] = report.total;
    j["overall_accuracy"] = report.overall_accuracy;
    j["up_accuracy"] = number_or_null(report.up_accuracy);
    j["down_accuracy"] = number_or_null(report.down_accuracy);
    return j;
}

json gaussian_model_json(const GaussianClassModel& model) {
    json j;
    j["kind"] = model.kind == GaussianClassModel::Kind::LDA ? "lda" : "qda";
    j["dim"] = model.dim;
    j["priors"] = {{"up", model.priors[0]}, {"down", model.priors[1]}};
    j["means"] = {{"up", model.means[0]}, {"down", model.means[1]}};
    j["covariances"] = {{"up", model.covariances[0]}, {"down", model.covariances[1]}};
    return j;
}

std::string dump_sorted(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string tweets_csv(const std::vector<TweetBatch>& batches, const SampleGrid& grid) {
    std::string out = "sample_ts,text\n";
    for (const auto& batch : batches) {
        const std::string ts = format_timestamp(grid.slot_start(batch.sample_index));
        for (const auto& tweet : batch.tweets) {
            out += ts;
            out += ',';
            out += csv_escape(tweet.text);
            out += '\n';
        }
    }
    return out;
}

std::string prices_csv(const Series& prices, const SampleGrid& grid) {
    std::string out = "sample_ts,close\n";
    for (const auto& p : prices) {
        out += format_timestamp(grid.slot_start(p.sample_index));
        out += ',';
        out += format_double(p.value);
        out += '\n';
    }
    return out;
}

std::string tss_csv(const Series& tss) {
    std::string out = "sample_index,tss\n";
    for (const auto& p : tss) {
        out += std::to_string(p.sample_index);
        out += ',';
        out += format_double(p.value);
        out += '\n';
    }
    return out;
}

std::string corpus_csv(const FrequencyTable& table) {
    std::string out = "token,total_count,sample_presence\n";
    for (const auto& entry : table.entries) {
        out += csv_escape(entry.token);
        out += ',';
        out += std::to_string(entry.total_count);
        out += ',';
        out += std::to_string(entry.sample_presence);
        out += '\n';
    }
    return out;
}

std::string lag_scan_csv(const LagScanReport& report) {
    std::string out = "lag,pearson_r,baseline_accuracy,n_pairs\n";
    for (const auto& m : report.per_lag) {
        out += std::to_string(m.lag);
        out += ',';
        if (m.pearson_r) out += format_double(*m.pearson_r);
        out += ',';
        if (m.baseline_accuracy) out += format_double(*m.baseline_accuracy);
        out += ',';
        out += std::to_string(m.n_pairs);
        out += '\n';
    }
    return out;
}

std::string lag_scan_json(const LagScanReport& report) {
    json per_lag = json::array();
    for (const auto& m : report.per_lag) {
        json row;
        row["lag"] = m.lag;
        row["pearson_r"] = m.pearson_r ? json(*m.pearson_r) : json(nullptr);
        row["baseline_accuracy"] =
            m.baseline_accuracy ? json(*m.baseline_accuracy) : json(nullptr);
        row["n_pairs"] = m.n_pairs;
        per_lag.push_back(row);
    }
    json j;
    j["best_lag"] = report.best_lag;
    j["per_lag"] = per_lag;
    return dump_sorted(j);
}

std::string fit_json(const FitReport& tss_fit, const FitReport& price_fit, std::int64_t lag) {
    json j;
    j["lag"] = lag;
    j["tss"] = fit_report_json(tss_fit);
    j["price_shifted"] = fit_report_json(price_fit);
    return dump_sorted(j);
}

std::string baseline_json(const BaselineReport& report) {
    json j;
    j["tss_b"] = report.tss_b;
    j["lag"] = report.lag;
    j["n_evaluated"] = report.n_evaluated;
    j["n_correct"] = report.n_correct;
    j["n_up"] = report.n_up;
    j["n_up_correct"] = report.n_up_correct;
    j["n_down"] = report.n_down;
    j["n_down_correct"] = report.n_down_correct;
    j["accuracy"] = report.accuracy;
    j["error_rate"] = report.error_rate;
    j["up_accuracy"] = number_or_null(report.up_accuracy);
    j["down_accuracy"] = number_or_null(report.down_accuracy);
    return dump_sorted(j);
}

std::string baseline_samples_csv(const BaselineReport& report) {
    std::string out = "t,tss,predicted,actual,correct\n";
    for (const auto& s : report.per_sample) {
        out += std::to_string(s.t);
        out += ',';
        out += format_double(s.tss);
        out += ',';
        out += to_string(s.predicted);
        out += ',';
        out += to_string(s.actual);
        out += ',';
        out += s.evaluated ? (s.correct ? "true" : "false") : "excluded";
        out += '\n';
    }
    return out;
}

std::string regions_csv(const RegionSegmentation& segmentation) {
    std::string out = "start_t,end_t,capable\n";
    for (const auto& r : segmentation.regions) {
        out += std::to_string(r.start_t);
        out += ',';
        out += std::to_string(r.end_t);
        out += ',';
        out += r.capable ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string cefd_csv(const std::vector<CefdSnapshot>& snapshots) {
    std::string out = "sample_index,cefd,cefp,n_funds\n";
    for (const auto& s : snapshots) {
        out += std::to_string(s.sample_index);
        out += ',';
        out += format_double(s.cefd);
        out += ',';
        out += format_double(s.cefp);
        out += ',';
        out += std::to_string(s.n_funds);
        out += '\n';
    }
    return out;
}

std::string models_json(const ClassifyResult& result) {
    json j;
    j["lag"] = result.lag;
    j["split"] = result.split;
    j["n_train"] = result.n_train;
    j["n_eval"] = result.n_eval;
    json logistic;
    logistic["kind"] = "logistic";
    logistic["weights"] = result.logistic.weights;
    logistic["converged"] = result.logistic.converged;
    logistic["iterations"] = result.logistic.iterations;
    j["logistic"] = logistic;
    j["lda"] = gaussian_model_json(result.lda);
    j["qda"] = gaussian_model_json(result.qda);
    return dump_sorted(j);
}

std::string confusion_json(const ClassifyResult& result) {
    json j;
    j["lag"] = result.lag;
    j["split"] = result.split;
    j["n_train"] = result.n_train;
    j["n_eval"] = result.n_eval;
    j["logistic"] = confusion_report_json(result.logistic_confusion);
    j["lda"] = confusion_report_json(result.lda_confusion);
    j["qda"] = confusion_report_json(result.qda_confusion);
    return dump_sorted(j);
}

}  // namespace tss
