#pragma once

#include "lmiq/baselines.hpp"
#include "lmiq/corpus.hpp"
#include "lmiq/default_bank.hpp"
#include "lmiq/evaluation.hpp"
#include "lmiq/features.hpp"
#include "lmiq/forest.hpp"
#include "lmiq/gateway.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace lmiq {

/// Everything a train/eval/ablate run needs; all randomness flows from `seed`.
struct RunConfig {
    std::filesystem::path corpus_root;
    std::filesystem::path labels; // defaults to corpus_root/labels.csv
    std::filesystem::path bank_path; // empty: built-in default bank
    BackendConfig backend;
    DomainMask mask = full_domain_mask();
    GridSpec grid;
    ForestParams forest_base; // bootstrap on, sqrt features, min_samples_leaf 1
    uint64_t seed = 0;
    std::filesystem::path out_dir = "out";
    std::vector<std::string> methods; // empty: all
    bool raw_zero_shot_sum = false;
    int threads = 1;
    int importance_k = 5;
};

inline const std::vector<std::string>& all_method_keys() {
    static const std::vector<std::string> kMethods = {
        "lmiq",         "zero-shot", "analyze-predict", "direct-embed",
        "analyze-embed", "tfidf",     "naive-mean"};
    return kMethods;
}

inline std::string method_display_name(const std::string& key) {
    if (key == "lmiq") return "LMIQ";
    if (key == "zero-shot") return "Impersonate Zero-Shot";
    if (key == "analyze-predict") return "Analyze & Predict";
    if (key == "direct-embed") return embedding_mode_name(EmbeddingMode::Direct);
    if (key == "analyze-embed") return embedding_mode_name(EmbeddingMode::AnalyzeFirst);
    if (key == "tfidf") return "TF-IDF";
    if (key == "naive-mean") return "Naive Mean";
    throw Error("unknown method: '" + key + "'");
}

inline QuestionnaireBank load_bank(const RunConfig& cfg) {
    return cfg.bank_path.empty() ? QuestionnaireBank::load_default()
                                 : QuestionnaireBank::load_file(cfg.bank_path);
}

inline Corpus load_corpus(const RunConfig& cfg) {
    std::filesystem::path labels = cfg.labels.empty() ? cfg.corpus_root / "labels.csv" : cfg.labels;
    return Corpus::ingest(cfg.corpus_root, labels);
}

inline std::string bank_summary(const QuestionnaireBank& bank) {
    std::ostringstream out;
    out << "bank: " << bank.name() << "\n";
    auto counts = bank.domain_counts();
    for (Domain d : kAllDomains)
        out << "  " << domain_key(d) << ": " << (counts.count(d) ? counts.at(d) : 0) << "\n";
    out << "  total: " << bank.size() << "\n";
    out << "topics:\n";
    for (const auto& group : bank.topic_groups())
        out << "  [" << domain_key(group.front()->domain) << "] " << group.front()->topic << ": "
            << group.size() << "\n";
    out << "sha256: " << bank.sha256() << "\n";
    return out.str();
}

inline void run_synth(int n, uint64_t seed, const std::filesystem::path& out_dir) {
    generate_synthetic(n, seed).save(out_dir);
}

/// Populates the completion cache and writes one answers/<subject>.json per
/// subject under the output directory. Returns the subject count.
inline int run_answer(const RunConfig& cfg) {
    QuestionnaireBank bank = load_bank(cfg);
    QuestionnaireBank masked = bank.masked(cfg.mask);
    Corpus corpus = load_corpus(cfg);
    Gateway gateway(cfg.backend);

    std::filesystem::create_directories(cfg.out_dir / "answers");
    parallel_for(corpus.subjects.size(), cfg.backend.max_parallel, [&](size_t i) {
        const Subject& s = corpus.subjects[i];
        AnswerVector av = gateway.answer_subject(s, masked);
        atomic_write_file(cfg.out_dir / "answers" / (s.subject_id + ".json"),
                          av.to_json().dump(2) + "\n");
    });
    return static_cast<int>(corpus.subjects.size());
}

namespace detail {

inline void push_split_rows(EvaluationReport& report, const std::string& method,
                            const std::string& target, const SplitMatrices& matrices,
                            const std::map<Split, std::vector<double>>& preds) {
    for (Split split : {Split::Dev, Split::Test}) {
        const FeatureMatrix& m = matrices.at(split);
        if (m.height() == 0) continue;
        report.rows.push_back(
            {method, split, target, metrics(preds.at(split), m.target(target))});
    }
}

// Per-subject scoring methods (no regressor): evaluated on dev and test only.
template <typename ScoreFn>
inline void push_direct_rows(EvaluationReport& report, const std::string& method,
                             const Corpus& corpus, int max_parallel, ScoreFn&& score) {
    for (Split split : {Split::Dev, Split::Test}) {
        std::vector<const Subject*> subjects = corpus.split_subjects(split);
        if (subjects.empty()) continue;
        for (const auto& target : {std::string("phq8"), std::string("pclc")}) {
            Instrument ins = target == "phq8" ? Instrument::PHQ8 : Instrument::PCLC;
            std::vector<double> pred(subjects.size());
            std::vector<double> truth(subjects.size());
            parallel_for(subjects.size(), max_parallel, [&](size_t i) {
                pred[i] = score(*subjects[i], ins);
                truth[i] = ins == Instrument::PHQ8 ? subjects[i]->phq8 : subjects[i]->pcl_c;
            });
            report.rows.push_back({method, split, target, metrics(pred, truth)});
        }
    }
}

} // namespace detail

/// Feature extraction, grid search, metrics, and report files for LMIQ plus
/// the configured baselines. Deterministic given (seed, warm cache): report
/// bytes contain no clocks.
inline EvaluationReport run_train_eval(const RunConfig& cfg) {
    QuestionnaireBank bank = load_bank(cfg);
    Corpus corpus = load_corpus(cfg);
    Gateway gateway(cfg.backend);

    std::vector<std::string> methods = cfg.methods.empty() ? all_method_keys() : cfg.methods;
    for (const auto& key : methods) method_display_name(key); // validate early

    EvaluationReport report;
    report.meta.seed = cfg.seed;
    report.meta.backend = cfg.backend.backend == BackendKind::Mock ? "mock" : "http";
    report.meta.model = cfg.backend.model_name;
    report.meta.bank_hash = bank.sha256();
    report.meta.corpus_name = corpus.name;
    report.meta.mask = mask_to_string(cfg.mask);

    for (const auto& key : methods) {
        const std::string name = method_display_name(key);
        if (key == "lmiq") {
            SplitMatrices matrices = extract_lmiq(corpus, bank, cfg.mask, gateway);
            RegressionOutcome outcome =
                regress_features(matrices, cfg.forest_base, cfg.grid, cfg.seed, cfg.threads);
            detail::push_split_rows(report, name, "phq8", matrices, outcome.pred_phq8);
            detail::push_split_rows(report, name, "pclc", matrices, outcome.pred_pclc);
            QuestionnaireBank masked = bank.masked(cfg.mask);
            report.top_importances["phq8"] =
                importances_topk(outcome.phq8.model, masked, cfg.importance_k);
            report.top_importances["pclc"] =
                importances_topk(outcome.pclc.model, masked, cfg.importance_k);
        } else if (key == "zero-shot") {
            detail::push_direct_rows(report, name, corpus, cfg.backend.max_parallel,
                                     [&](const Subject& s, Instrument ins) {
                                         return zero_shot_sum(s, ins, bank, gateway,
                                                              cfg.raw_zero_shot_sum);
                                     });
        } else if (key == "analyze-predict") {
            detail::push_direct_rows(report, name, corpus, cfg.backend.max_parallel,
                                     [&](const Subject& s, Instrument ins) {
                                         return analyze_and_predict(s, ins, gateway);
                                     });
        } else if (key == "direct-embed" || key == "analyze-embed") {
            EmbeddingMode mode =
                key == "direct-embed" ? EmbeddingMode::Direct : EmbeddingMode::AnalyzeFirst;
            SplitMatrices matrices = extract_embedding(corpus, mode, gateway);
            RegressionOutcome outcome =
                regress_features(matrices, cfg.forest_base, cfg.grid, cfg.seed, cfg.threads);
            detail::push_split_rows(report, name, "phq8", matrices, outcome.pred_phq8);
            detail::push_split_rows(report, name, "pclc", matrices, outcome.pred_pclc);
        } else if (key == "tfidf") {
            SplitMatrices matrices = extract_tfidf(corpus);
            RegressionOutcome outcome =
                regress_features(matrices, cfg.forest_base, cfg.grid, cfg.seed, cfg.threads);
            detail::push_split_rows(report, name, "phq8", matrices, outcome.pred_phq8);
            detail::push_split_rows(report, name, "pclc", matrices, outcome.pred_pclc);
        } else if (key == "naive-mean") {
            std::vector<const Subject*> train = corpus.split_subjects(Split::Train);
            if (train.empty()) throw Error("naive-mean: empty train split");
            std::vector<double> phq8_train, pclc_train;
            for (const Subject* s : train) {
                phq8_train.push_back(s->phq8);
                pclc_train.push_back(s->pcl_c);
            }
            double phq8_mean = naive_mean(phq8_train);
            double pclc_mean = naive_mean(pclc_train);
            detail::push_direct_rows(report, name, corpus, 1,
                                     [&](const Subject&, Instrument ins) {
                                         return ins == Instrument::PHQ8 ? phq8_mean : pclc_mean;
                                     });
        }
    }

    report.meta.cache_hits = gateway.cache().hits();
    report.meta.cache_misses = gateway.cache().misses();

    atomic_write_file(cfg.out_dir / "report.csv", method_rows_csv(report.rows));
    atomic_write_file(cfg.out_dir / "report.md", report_markdown(report));
    return report;
}

/// Ablation over the fixed mask set (or a single caller-supplied mask);
/// writes the domain/feature-count/metrics CSV.
inline std::vector<AblationRow> run_ablate(const RunConfig& cfg,
                                           const DomainMask* single_mask = nullptr) {
    QuestionnaireBank bank = load_bank(cfg);
    Corpus corpus = load_corpus(cfg);
    Gateway gateway(cfg.backend);

    std::vector<AblationRow> rows;
    if (single_mask != nullptr) {
        SplitMatrices matrices = extract_lmiq(corpus, bank, *single_mask, gateway);
        RegressionOutcome outcome =
            regress_features(matrices, cfg.forest_base, cfg.grid, cfg.seed, cfg.threads);
        AblationRow row;
        row.mask = *single_mask;
        row.feature_count = static_cast<int>(matrices.at(Split::Train).width());
        row.dev_phq8 = metrics(outcome.pred_phq8.at(Split::Dev), matrices.at(Split::Dev).target_phq8);
        row.test_phq8 =
            metrics(outcome.pred_phq8.at(Split::Test), matrices.at(Split::Test).target_phq8);
        row.dev_pclc = metrics(outcome.pred_pclc.at(Split::Dev), matrices.at(Split::Dev).target_pclc);
        row.test_pclc =
            metrics(outcome.pred_pclc.at(Split::Test), matrices.at(Split::Test).target_pclc);
        rows.push_back(std::move(row));
    } else {
        rows = run_ablation(corpus, bank, gateway, cfg.seed, cfg.forest_base, cfg.grid, cfg.threads);
    }
    atomic_write_file(cfg.out_dir / "ablation.csv", ablation_csv(rows));
    return rows;
}

} // namespace lmiq
