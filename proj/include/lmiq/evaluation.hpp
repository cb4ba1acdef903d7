#pragma once

#include "lmiq/baselines.hpp"
#include "lmiq/corpus.hpp"
#include "lmiq/features.hpp"
#include "lmiq/forest.hpp"
#include "lmiq/gateway.hpp"
#include "lmiq/metrics.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <map>
#include <string>
#include <vector>

namespace lmiq {

struct MethodRow {
    std::string method;
    Split split = Split::Dev;
    std::string target; // "phq8" or "pclc"
    MetricSet m;
};

struct AblationRow {
    DomainMask mask;
    int feature_count = 0;
    MetricSet dev_phq8, test_phq8, dev_pclc, test_pclc;
};

struct RunMetadata {
    uint64_t seed = 0;
    std::string backend;
    std::string model;
    std::string bank_hash;
    std::string corpus_name;
    std::string mask;
    uint64_t cache_hits = 0;
    uint64_t cache_misses = 0;
};

struct EvaluationReport {
    std::vector<MethodRow> rows;
    std::vector<AblationRow> ablation;
    std::map<std::string, std::vector<std::pair<std::string, double>>> top_importances;
    RunMetadata meta;
};

/// The domain combinations of the ablation study, in fixed row order.
inline const std::vector<DomainMask>& ablation_masks() {
    static const std::vector<DomainMask> kMasks = {
        {Domain::MentalHealth, Domain::Direct},
        {Domain::Therapeutic, Domain::Direct},
        {Domain::Personality, Domain::Direct},
        {Domain::Direct},
        {Domain::MentalHealth, Domain::Personality, Domain::Therapeutic, Domain::Direct},
        {Domain::MentalHealth, Domain::Personality},
        {Domain::MentalHealth},
        {Domain::MentalHealth, Domain::Personality, Domain::Therapeutic},
        {Domain::MentalHealth, Domain::Therapeutic},
        {Domain::Personality},
        {Domain::Therapeutic},
    };
    return kMasks;
}

/// Runs every ablation mask through the full grid-search pipeline. Features
/// are extracted once for the full bank and column-sliced per mask, which is
/// equivalent to per-mask extraction when answers come from the cache.
inline std::vector<AblationRow> run_ablation(const Corpus& corpus, const QuestionnaireBank& bank,
                                             Gateway& gateway, uint64_t seed,
                                             const ForestParams& base = {},
                                             const GridSpec& grid = {}, int threads = 1) {
    SplitMatrices full = extract_lmiq(corpus, bank, full_domain_mask(), gateway);

    std::vector<AblationRow> rows;
    for (const DomainMask& mask : ablation_masks()) {
        QuestionnaireBank masked = bank.masked(mask);
        std::vector<std::string> ids;
        for (const auto& q : masked.questions()) ids.push_back(q.id);

        SplitMatrices matrices;
        for (const auto& [split, m] : full) matrices[split] = m.select_columns(ids);
        RegressionOutcome outcome = regress_features(matrices, base, grid, seed, threads);

        AblationRow row;
        row.mask = mask;
        row.feature_count = static_cast<int>(masked.size());
        row.dev_phq8 = metrics(outcome.pred_phq8.at(Split::Dev), matrices.at(Split::Dev).target_phq8);
        row.test_phq8 =
            metrics(outcome.pred_phq8.at(Split::Test), matrices.at(Split::Test).target_phq8);
        row.dev_pclc = metrics(outcome.pred_pclc.at(Split::Dev), matrices.at(Split::Dev).target_pclc);
        row.test_pclc =
            metrics(outcome.pred_pclc.at(Split::Test), matrices.at(Split::Test).target_pclc);
        rows.push_back(std::move(row));
    }
    return rows;
}

enum class ReportFormat { CSV, Markdown };

inline std::string method_rows_csv(const std::vector<MethodRow>& rows) {
    std::string out = "method,split,target,n,mse,mae,rmse\n";
    for (const auto& r : rows) {
        out += r.method;
        out += ",";
        out += split_key(r.split);
        out += "," + r.target + "," + std::to_string(r.m.n) + "," + format_full(r.m.mse) + "," +
               format_full(r.m.mae) + "," + format_full(r.m.rmse) + "\n";
    }
    return out;
}

inline std::string ablation_csv(const std::vector<AblationRow>& rows) {
    std::string out =
        "mental_health,personality,therapeutic,direct,n_features,"
        "phq8_dev_mse,phq8_test_mse,pclc_dev_mse,pclc_test_mse\n";
    for (const auto& r : rows) {
        for (Domain d : kAllDomains) out += std::string(r.mask.count(d) ? "1" : "0") + ",";
        out += std::to_string(r.feature_count) + "," + format_full(r.dev_phq8.mse) + "," +
               format_full(r.test_phq8.mse) + "," + format_full(r.dev_pclc.mse) + "," +
               format_full(r.test_pclc.mse) + "\n";
    }
    return out;
}

namespace detail {

inline const MetricSet* find_row(const std::vector<MethodRow>& rows, const std::string& method,
                                 Split split, const std::string& target) {
    for (const auto& r : rows)
        if (r.method == method && r.split == split && r.target == target) return &r.m;
    return nullptr;
}

} // namespace detail

inline std::string report_markdown(const EvaluationReport& report) {
    std::string out = "# Evaluation Report\n\n";

    out += "## Model performance (MSE)\n\n";
    out += "| Model | PHQ Dev MSE | PHQ Test MSE | PTSD Dev MSE | PTSD Test MSE |\n";
    out += "|---|---|---|---|---|\n";
    std::vector<std::string> methods;
    for (const auto& r : report.rows)
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
            methods.push_back(r.method);
    for (const auto& method : methods) {
        out += "| " + method + " |";
        for (const auto& target : {"phq8", "pclc"})
            for (Split split : {Split::Dev, Split::Test}) {
                const MetricSet* m = detail::find_row(report.rows, method, split, target);
                out += m ? " " + format_fixed(m->mse) + " |" : " - |";
            }
        out += "\n";
    }

    out += "\n## Metric detail (MAE / RMSE)\n\n";
    out += "| Method | Target | MAE Dev/Test | RMSE Dev/Test |\n|---|---|---|---|\n";
    for (const auto& method : methods) {
        for (const auto& target : {"phq8", "pclc"}) {
            const MetricSet* dev = detail::find_row(report.rows, method, Split::Dev, target);
            const MetricSet* test = detail::find_row(report.rows, method, Split::Test, target);
            if (!dev && !test) continue;
            auto fmt = [](const MetricSet* m, double MetricSet::*field) {
                return m ? format_fixed(m->*field) : std::string("-");
            };
            out += "| " + method + " | " + target + " | " + fmt(dev, &MetricSet::mae) + "/" +
                   fmt(test, &MetricSet::mae) + " | " + fmt(dev, &MetricSet::rmse) + "/" +
                   fmt(test, &MetricSet::rmse) + " |\n";
        }
    }

    if (!report.ablation.empty()) {
        out += "\n## Domain ablation\n\n";
        out += "| M. Health | Personality | Therapeutic | Direct | # Features "
               "| PHQ Dev MSE | PHQ Test MSE | PTSD Dev MSE | PTSD Test MSE |\n";
        out += "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : report.ablation) {
            out += "|";
            for (Domain d : kAllDomains) out += r.mask.count(d) ? " yes |" : " no |";
            out += " " + std::to_string(r.feature_count) + " | " + format_fixed(r.dev_phq8.mse) +
                   " | " + format_fixed(r.test_phq8.mse) + " | " + format_fixed(r.dev_pclc.mse) +
                   " | " + format_fixed(r.test_pclc.mse) + " |\n";
        }
    }

    for (const auto& [target, entries] : report.top_importances) {
        out += "\n## Top questions influencing the " +
               std::string(target == "phq8" ? "PHQ score" : "PCL severity") + "\n\n";
        out += "| Feature | Relative Importance |\n|---|---|\n";
        for (const auto& [text, weight] : entries)
            out += "| " + text + " | " + format_fixed(weight) + " |\n";
    }

    out += "\n## Run metadata\n\n";
    out += "- seed: " + std::to_string(report.meta.seed) + "\n";
    out += "- backend: " + report.meta.backend + "\n";
    out += "- model: " + report.meta.model + "\n";
    out += "- bank: " + report.meta.bank_hash + "\n";
    out += "- corpus: " + report.meta.corpus_name + "\n";
    out += "- mask: " + report.meta.mask + "\n";
    out += "- cache: " + std::to_string(report.meta.cache_hits) + " hits, " +
           std::to_string(report.meta.cache_misses) + " misses\n";
    return out;
}

inline std::string render_report(const EvaluationReport& report, ReportFormat format) {
    return format == ReportFormat::CSV ? method_rows_csv(report.rows) : report_markdown(report);
}

} // namespace lmiq
