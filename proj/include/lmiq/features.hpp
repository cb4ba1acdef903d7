#pragma once

#include "lmiq/corpus.hpp"
#include "lmiq/errors.hpp"
#include "lmiq/gateway.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <map>
#include <string>
#include <vector>

namespace lmiq {

/// Design matrix for one split: rows in corpus order, one column per feature,
/// targets carried alongside.
struct FeatureMatrix {
    std::vector<std::string> subject_ids;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> column_ids;
    std::vector<double> target_phq8;
    std::vector<double> target_pclc;

    size_t height() const { return rows.size(); }
    size_t width() const { return column_ids.size(); }

    const std::vector<double>& target(const std::string& name) const {
        if (name == "phq8") return target_phq8;
        if (name == "pclc") return target_pclc;
        throw Error("unknown target: " + name);
    }

    std::string to_csv() const {
        std::string out = "subject_id";
        for (const auto& c : column_ids) out += "," + c;
        out += ",phq8,pcl_c\n";
        for (size_t r = 0; r < rows.size(); ++r) {
            out += subject_ids[r];
            for (double v : rows[r]) out += "," + format_full(v);
            out += "," + format_full(target_phq8[r]) + "," + format_full(target_pclc[r]) + "\n";
        }
        return out;
    }

    /// Column subset in the given order; ids must exist.
    FeatureMatrix select_columns(const std::vector<std::string>& ids) const {
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < column_ids.size(); ++i) index[column_ids[i]] = i;
        std::vector<size_t> picks;
        for (const auto& id : ids) {
            auto it = index.find(id);
            if (it == index.end()) throw Error("select_columns: unknown column " + id);
            picks.push_back(it->second);
        }
        FeatureMatrix out;
        out.subject_ids = subject_ids;
        out.column_ids = ids;
        out.target_phq8 = target_phq8;
        out.target_pclc = target_pclc;
        out.rows.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<double> nr;
            nr.reserve(picks.size());
            for (size_t p : picks) nr.push_back(row[p]);
            out.rows.push_back(std::move(nr));
        }
        return out;
    }
};

using SplitMatrices = std::map<Split, FeatureMatrix>;

namespace detail {

inline SplitMatrices assemble_split_matrices(const Corpus& corpus,
                                             std::vector<std::string> column_ids,
                                             const std::vector<std::vector<double>>& rows_by_subject) {
    SplitMatrices out;
    for (Split split : {Split::Train, Split::Dev, Split::Test}) {
        FeatureMatrix m;
        m.column_ids = column_ids;
        out[split] = std::move(m);
    }
    for (size_t i = 0; i < corpus.subjects.size(); ++i) {
        const Subject& s = corpus.subjects[i];
        FeatureMatrix& m = out[s.split];
        m.subject_ids.push_back(s.subject_id);
        m.rows.push_back(rows_by_subject[i]);
        m.target_phq8.push_back(static_cast<double>(s.phq8));
        m.target_pclc.push_back(static_cast<double>(s.pcl_c));
    }
    return out;
}

} // namespace detail

/// Impersonated answers as features: one column per masked-bank question in
/// ordinal order, raw answer integers cast to real (tree ensembles do not need
/// scaling). Subjects run in parallel; row order always equals corpus order.
inline SplitMatrices extract_lmiq(const Corpus& corpus, const QuestionnaireBank& bank,
                                  const DomainMask& mask, Gateway& gateway) {
    QuestionnaireBank masked = bank.masked(mask);
    std::vector<std::string> column_ids;
    for (const auto& q : masked.questions()) column_ids.push_back(q.id);

    std::vector<std::vector<double>> rows(corpus.subjects.size());
    parallel_for(corpus.subjects.size(), gateway.config().max_parallel, [&](size_t i) {
        AnswerVector av = gateway.answer_subject(corpus.subjects[i], masked);
        rows[i].assign(av.values.begin(), av.values.end());
    });
    return detail::assemble_split_matrices(corpus, std::move(column_ids), rows);
}

enum class EmbeddingMode { Direct, AnalyzeFirst };

inline const char* embedding_mode_name(EmbeddingMode mode) {
    return mode == EmbeddingMode::Direct ? "Direct Embedding" : "Analyze & Embed";
}

/// Transcript embeddings as features. Direct embeds the raw transcript;
/// AnalyzeFirst first asks the backend for a clinical analysis and embeds that.
inline SplitMatrices extract_embedding(const Corpus& corpus, EmbeddingMode mode,
                                       Gateway& gateway) {
    std::vector<std::vector<double>> rows(corpus.subjects.size());
    parallel_for(corpus.subjects.size(), gateway.config().max_parallel, [&](size_t i) {
        const Subject& s = corpus.subjects[i];
        if (mode == EmbeddingMode::Direct) {
            rows[i] = gateway.embed(s.transcript);
        } else {
            std::string analysis = gateway.complete(build_analysis_prompt(s.transcript));
            rows[i] = gateway.embed(analysis);
        }
    });

    size_t dim = 0;
    for (const auto& r : rows) dim = std::max(dim, r.size());
    for (const auto& r : rows)
        if (!r.empty() && r.size() != dim)
            throw Error("embedding dimension mismatch across subjects");
    std::vector<std::string> column_ids;
    column_ids.reserve(dim);
    for (size_t d = 0; d < dim; ++d) column_ids.push_back("emb_" + std::to_string(d));
    return detail::assemble_split_matrices(corpus, std::move(column_ids), rows);
}

} // namespace lmiq
