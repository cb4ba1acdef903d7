#pragma once

#include "lmiq/corpus.hpp"
#include "lmiq/errors.hpp"
#include "lmiq/features.hpp"
#include "lmiq/forest.hpp"
#include "lmiq/gateway.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace lmiq {

/// Plain TF-IDF with smoothed idf and L2 row normalization:
/// idf_t = ln((1+N)/(1+df_t)) + 1, weight = tf * idf, tf = raw count.
/// Tokens unseen at fit time are ignored at transform time.
struct TfidfModel {
    std::vector<std::string> vocabulary; // sorted; doubles as column ids
    std::vector<double> idf;
    std::unordered_map<std::string, size_t> index;

    static TfidfModel fit(const std::vector<std::string>& docs) {
        std::map<std::string, int> df;
        size_t non_empty = 0;
        for (const auto& doc : docs) {
            std::vector<std::string> toks = tokenize(doc);
            if (!toks.empty()) ++non_empty;
            std::map<std::string, int> seen;
            for (const auto& t : toks) seen[t] = 1;
            for (const auto& [t, one] : seen) df[t] += one;
        }
        if (non_empty == 0) throw Error("tfidf: empty corpus");

        TfidfModel model;
        const double n_docs = static_cast<double>(docs.size());
        for (const auto& [token, count] : df) {
            model.index[token] = model.vocabulary.size();
            model.vocabulary.push_back(token);
            model.idf.push_back(std::log((1.0 + n_docs) / (1.0 + count)) + 1.0);
        }
        return model;
    }

    std::vector<double> transform_one(const std::string& doc) const {
        std::vector<double> row(vocabulary.size(), 0.0);
        for (const auto& t : tokenize(doc)) {
            auto it = index.find(t);
            if (it != index.end()) row[it->second] += 1.0;
        }
        double norm = 0.0;
        for (size_t i = 0; i < row.size(); ++i) {
            row[i] *= idf[i];
            norm += row[i] * row[i];
        }
        if (norm > 0.0) {
            norm = std::sqrt(norm);
            for (double& v : row) v /= norm;
        }
        return row;
    }

    Matrix transform(const std::vector<std::string>& docs) const {
        Matrix out;
        out.reserve(docs.size());
        for (const auto& doc : docs) out.push_back(transform_one(doc));
        return out;
    }
};

/// TF-IDF features over the corpus transcripts; the vectorizer is fit on the
/// training split only.
inline SplitMatrices extract_tfidf(const Corpus& corpus) {
    std::vector<std::string> train_docs;
    for (const Subject* s : corpus.split_subjects(Split::Train)) train_docs.push_back(s->transcript);
    TfidfModel model = TfidfModel::fit(train_docs);

    std::vector<std::vector<double>> rows(corpus.subjects.size());
    for (size_t i = 0; i < corpus.subjects.size(); ++i)
        rows[i] = model.transform_one(corpus.subjects[i].transcript);
    return detail::assemble_split_matrices(corpus, model.vocabulary, rows);
}

inline int instrument_min(Instrument ins) { return ins == Instrument::PHQ8 ? 0 : 17; }
inline int instrument_max(Instrument ins) { return ins == Instrument::PHQ8 ? 24 : 85; }
inline int instrument_item_min(Instrument ins) { return ins == Instrument::PHQ8 ? 0 : 1; }
inline int instrument_item_max(Instrument ins) { return ins == Instrument::PHQ8 ? 3 : 5; }

/// Impersonates the instrument's own questionnaire and sums the item answers,
/// mirroring how the instruments are scored clinically. Each 1-5 agreement
/// answer is linearly rescaled onto the instrument's item scale (PHQ-8 items
/// score 0-3, PCL-C items 1-5) unless raw_sum is set.
inline double zero_shot_sum(const Subject& subject, Instrument ins,
                            const QuestionnaireBank& bank, Gateway& gateway,
                            bool raw_sum = false) {
    QuestionnaireBank items = bank.topic_subset(instrument_name(ins));
    AnswerVector answers = gateway.answer_subject(subject, items);
    double total = 0.0;
    for (size_t i = 0; i < answers.values.size(); ++i) {
        const Question& q = items.by_ordinal(static_cast<int>(i));
        double a = answers.values[i];
        if (raw_sum) {
            total += a;
            continue;
        }
        double span = q.scale_max - q.scale_min;
        double lo = instrument_item_min(ins), hi = instrument_item_max(ins);
        total += lo + (a - q.scale_min) * (hi - lo) / span;
    }
    return total;
}

/// Asks the backend for the score outright and reads the first number that
/// falls inside the instrument's range.
inline double analyze_and_predict(const Subject& subject, Instrument ins, Gateway& gateway) {
    PromptRequest req = build_direct_prediction_prompt(subject.transcript, ins);
    std::string reply = gateway.complete(req);
    try {
        return parse_answers(reply, 1, instrument_min(ins), instrument_max(ins)).front();
    } catch (const ParseFailure&) {
        throw Error("analyze_and_predict: no in-range " + std::string(instrument_name(ins)) +
                    " score in reply for subject " + subject.subject_id);
    }
}

inline double naive_mean(const std::vector<double>& train_targets) {
    if (train_targets.empty()) throw Error("naive_mean: empty targets");
    double sum = 0.0;
    for (double v : train_targets) sum += v;
    return sum / static_cast<double>(train_targets.size());
}

/// One grid-searched forest per target on shared features; every
/// feature-extraction method goes through this same path.
struct RegressionOutcome {
    GridSearchResult phq8;
    GridSearchResult pclc;
    std::map<Split, std::vector<double>> pred_phq8;
    std::map<Split, std::vector<double>> pred_pclc;
};

inline RegressionOutcome regress_features(const SplitMatrices& matrices,
                                          const ForestParams& base, const GridSpec& grid,
                                          uint64_t seed, int threads = 1) {
    const FeatureMatrix& train = matrices.at(Split::Train);
    const FeatureMatrix& dev = matrices.at(Split::Dev);
    ForestParams params = base;
    params.seed = seed;

    RegressionOutcome out;
    out.phq8 = grid_search(train.rows, train.target_phq8, dev.rows, dev.target_phq8, params, grid,
                           "phq8", threads);
    out.pclc = grid_search(train.rows, train.target_pclc, dev.rows, dev.target_pclc, params, grid,
                           "pclc", threads);
    for (const auto& [split, m] : matrices) {
        out.pred_phq8[split] = out.phq8.model.predict(m.rows);
        out.pred_pclc[split] = out.pclc.model.predict(m.rows);
    }
    return out;
}

inline RegressionOutcome embed_regress(const Corpus& corpus, EmbeddingMode mode, Gateway& gateway,
                                       const ForestParams& base, const GridSpec& grid,
                                       uint64_t seed, int threads = 1) {
    return regress_features(extract_embedding(corpus, mode, gateway), base, grid, seed, threads);
}

} // namespace lmiq
