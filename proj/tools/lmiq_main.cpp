#include "lmiq/default_bank.hpp"
#include "lmiq/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct CommonArgs {
    std::string corpus;
    std::string labels;
    std::string bank;
    std::string backend = "mock";
    std::string model;
    std::string mask = "mh,pers,ther,direct";
    std::string cache_dir;
    std::string out = "out";
    uint64_t seed = 0;
    int max_parallel = 4;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool require_seed) {
    cmd->add_option("--corpus", args.corpus, "Corpus root directory")->required();
    cmd->add_option("--labels", args.labels, "Labels manifest (default: <corpus>/labels.csv)");
    cmd->add_option("--bank", args.bank, "Question bank file (default: built-in)");
    cmd->add_option("--backend", args.backend, "Completion backend: mock or http")
        ->check(CLI::IsMember({"mock", "http"}));
    cmd->add_option("--model", args.model, "Backend model name");
    cmd->add_option("--mask", args.mask, "Domain mask, e.g. mh,pers,ther,direct");
    cmd->add_option("--cache-dir", args.cache_dir, "Completion cache directory");
    cmd->add_option("--out", args.out, "Output directory");
    auto* seed_opt = cmd->add_option("--seed", args.seed, "Seed for all randomness");
    if (require_seed) seed_opt->required();
    cmd->add_option("--max-parallel", args.max_parallel, "Max in-flight backend requests")
        ->check(CLI::PositiveNumber);
}

lmiq::RunConfig to_run_config(const CommonArgs& args) {
    lmiq::RunConfig cfg;
    cfg.corpus_root = args.corpus;
    if (!args.labels.empty()) cfg.labels = args.labels;
    if (!args.bank.empty()) cfg.bank_path = args.bank;
    cfg.backend.backend = lmiq::backend_kind_from_string(args.backend);
    if (!args.model.empty())
        cfg.backend.model_name = args.model;
    else if (cfg.backend.backend == lmiq::BackendKind::HttpCompletion)
        cfg.backend.model_name = "gpt-3.5-turbo-instruct";
    cfg.backend.max_parallel = args.max_parallel;
    cfg.backend.mock_seed = args.seed;
    if (!args.cache_dir.empty()) cfg.backend.cache_dir = args.cache_dir;
    cfg.mask = lmiq::parse_domain_mask(args.mask);
    cfg.seed = args.seed;
    cfg.out_dir = args.out;
    if (cfg.backend.backend == lmiq::BackendKind::HttpCompletion &&
        std::getenv("LMIQ_API_KEY") == nullptr && std::getenv("LMIQ_API_BASE") == nullptr) {
        throw lmiq::Error(
            "http backend needs credentials: export LMIQ_API_KEY (and optionally "
            "LMIQ_API_BASE to point at a non-default endpoint)");
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impersonated-questionnaire feature extraction and severity-score regression"};
    app.require_subcommand(1);

    // bank
    auto* bank_cmd = app.add_subcommand("bank", "Print question bank summary");
    std::string bank_path;
    bank_cmd->add_option("--bank", bank_path, "Question bank file (default: built-in)");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
    int synth_n = 60;
    uint64_t synth_seed = 0;
    std::string synth_out = "synthetic";
    synth_cmd->add_option("--n", synth_n, "Subject count (>= 3)")->required();
    synth_cmd->add_option("--seed", synth_seed, "Generator seed")->required();
    synth_cmd->add_option("--out", synth_out, "Corpus output directory");

    // answer
    CommonArgs answer_args;
    auto* answer_cmd = app.add_subcommand("answer", "Populate the answer cache and emit vectors");
    add_common_options(answer_cmd, answer_args, /*require_seed=*/false);

    // train-eval
    CommonArgs te_args;
    std::vector<std::string> te_methods;
    bool raw_sum = false;
    auto* te_cmd = app.add_subcommand("train-eval", "Extract features, grid-search, report metrics");
    add_common_options(te_cmd, te_args, /*require_seed=*/true);
    te_cmd->add_option("--methods", te_methods,
                       "Methods to run (default: all of lmiq, zero-shot, analyze-predict, "
                       "direct-embed, analyze-embed, tfidf, naive-mean)")
        ->delimiter(',');
    te_cmd->add_flag("--raw-zero-shot-sum", raw_sum,
                     "Sum raw 1-5 answers instead of rescaling to the instrument range");

    // ablate
    CommonArgs ab_args;
    std::string ab_single_mask;
    auto* ab_cmd = app.add_subcommand("ablate", "Run the domain ablation grid");
    add_common_options(ab_cmd, ab_args, /*require_seed=*/true);
    ab_cmd->add_option("--single-mask", ab_single_mask,
                       "Run one mask (e.g. mh,direct) instead of the full ablation table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bank_cmd) {
            lmiq::QuestionnaireBank bank = bank_path.empty()
                                               ? lmiq::QuestionnaireBank::load_default()
                                               : lmiq::QuestionnaireBank::load_file(bank_path);
            std::cout << lmiq::bank_summary(bank);
        } else if (*synth_cmd) {
            lmiq::run_synth(synth_n, synth_seed, synth_out);
            std::cout << "wrote " << synth_n << " subjects to " << synth_out << "\n";
        } else if (*answer_cmd) {
            lmiq::RunConfig cfg = to_run_config(answer_args);
            int n = lmiq::run_answer(cfg);
            std::cout << "answered " << n << " subjects; vectors under "
                      << (cfg.out_dir / "answers").string() << "\n";
        } else if (*te_cmd) {
            lmiq::RunConfig cfg = to_run_config(te_args);
            cfg.methods = te_methods;
            cfg.raw_zero_shot_sum = raw_sum;
            lmiq::EvaluationReport report = lmiq::run_train_eval(cfg);
            std::cout << lmiq::report_markdown(report);
            std::cout << "\nwrote " << (cfg.out_dir / "report.csv").string() << " and "
                      << (cfg.out_dir / "report.md").string() << "\n";
        } else if (*ab_cmd) {
            lmiq::RunConfig cfg = to_run_config(ab_args);
            std::vector<lmiq::AblationRow> rows;
            if (!ab_single_mask.empty()) {
                lmiq::DomainMask mask = lmiq::parse_domain_mask(ab_single_mask);
                rows = lmiq::run_ablate(cfg, &mask);
            } else {
                rows = lmiq::run_ablate(cfg);
            }
            std::cout << lmiq::ablation_csv(rows);
            std::cout << "wrote " << (cfg.out_dir / "ablation.csv").string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
