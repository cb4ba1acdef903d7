#pragma once

#include "lmiq/backend.hpp"
#include "lmiq/cache.hpp"
#include "lmiq/corpus.hpp"
#include "lmiq/errors.hpp"
#include "lmiq/prompts.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace lmiq {

enum class Provenance { Parsed, Imputed };

/// Per-subject answers aligned to bank ordinals: values[i] answers the
/// question with ordinal i in the (possibly masked) bank used to produce it.
struct AnswerVector {
    std::string subject_id;
    std::vector<int> values;
    std::vector<Provenance> provenance;

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["subject_id"] = subject_id;
        doc["values"] = values;
        nlohmann::json prov = nlohmann::json::array();
        for (Provenance p : provenance) prov.push_back(p == Provenance::Parsed ? "parsed" : "imputed");
        doc["provenance"] = std::move(prov);
        return doc;
    }
};

/// Extracts the first `expected` in-range integers from a completion, scanning
/// left to right line by line. Handles numbered-list labels ("1. 4", "3) 4",
/// "Q2: 4"), prose ("I would say 4"), and bare numbers. Out-of-range integers,
/// decimals, and digits glued to identifiers ("PHQ-8") are skipped. A bare
/// numbered label whose line has no other integer reads as the answer itself.
/// Throws ParseFailure carrying the count found when too few turn up.
inline std::vector<int> parse_answers(const std::string& text, int expected, int scale_min,
                                      int scale_max) {
    if (expected < 1) throw Error("parse_answers: expected must be >= 1");

    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto is_alpha = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };

    auto strip_label = [&](const std::string& line) -> std::string {
        size_t i = 0;
        const size_t n = line.size();
        if (i < n && (line[i] == 'Q' || line[i] == 'q')) ++i;
        size_t digits_start = i;
        while (i < n && is_digit(line[i])) ++i;
        if (i == digits_start || i >= n) return line;
        char sep = line[i];
        if (sep != '.' && sep != ')' && sep != ':') return line;
        if (sep == '.' && i + 1 < n && is_digit(line[i + 1])) return line; // decimal, not a label
        std::string rest = line.substr(i + 1);
        for (char c : rest)
            if (is_digit(c)) return rest;
        return line;
    };

    std::vector<int> out;
    for (const auto& raw_line : split(text, '\n')) {
        if (static_cast<int>(out.size()) >= expected) break;
        std::string line = strip_label(trim(raw_line));
        const size_t n = line.size();
        size_t i = 0;
        while (i < n && static_cast<int>(out.size()) < expected) {
            if (!is_digit(line[i])) {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < n && is_digit(line[i])) ++i;

            // Fractional part of a decimal we already stepped over.
            if (start >= 2 && line[start - 1] == '.' && is_digit(line[start - 2])) continue;
            // Decimal number: skip it whole.
            if (i + 1 < n && line[i] == '.' && is_digit(line[i + 1])) {
                i += 2;
                while (i < n && is_digit(line[i])) ++i;
                continue;
            }
            // Digits glued to an identifier, e.g. "PHQ-8" or "Q3".
            bool negative = false;
            if (start > 0) {
                char prev = line[start - 1];
                if (is_alpha(prev)) continue;
                if ((prev == '-' || prev == '/' || prev == '_') && start > 1 &&
                    is_alpha(line[start - 2]))
                    continue;
                if (prev == '-' && (start == 1 || !is_digit(line[start - 2]))) negative = true;
            }

            if (i - start > 9) continue; // absurdly long digit run
            long value = std::stol(line.substr(start, i - start));
            if (negative) value = -value;
            if (value >= scale_min && value <= scale_max)
                out.push_back(static_cast<int>(value));
        }
    }
    if (static_cast<int>(out.size()) < expected)
        throw ParseFailure(static_cast<int>(out.size()), expected);
    return out;
}

/// Front door to the completion backend: caching keyed on (model, rendered
/// prompt), bounded retries with exponential backoff on transport errors, and
/// the per-topic questionnaire loop. Each request is stateless; nothing
/// carries over between questionnaires.
class Gateway {
public:
    explicit Gateway(BackendConfig cfg)
        : cfg_(std::move(cfg)), backend_(make_backend(cfg_)), cache_(cfg_.cache_dir) {}

    Gateway(BackendConfig cfg, std::unique_ptr<CompletionBackend> backend)
        : cfg_(std::move(cfg)), backend_(std::move(backend)), cache_(cfg_.cache_dir) {}

    const BackendConfig& config() const { return cfg_; }
    CompletionCache& cache() { return cache_; }

    std::string complete(const PromptRequest& req, bool bypass_cache = false) {
        std::string key = CompletionCache::key(cfg_.model_name, req.rendered);
        if (!bypass_cache)
            if (auto hit = cache_.lookup(key)) return *hit;
        std::string text = with_retries([&] { return backend_->complete(cfg_.model_name, req.rendered); },
                                        key);
        cache_.store(key, cfg_.model_name, req.rendered, text);
        return text;
    }

    std::vector<double> embed(const std::string& text) {
        if (text.empty()) throw Error("embed: empty text");
        std::string key = sha256_hex(cfg_.model_name + std::string(1, '\x00') + "embed" +
                                     std::string(1, '\x00') + text);
        if (auto hit = cache_.lookup(key)) {
            try {
                return nlohmann::json::parse(*hit).get<std::vector<double>>();
            } catch (const nlohmann::json::exception&) {
                cache_.forget(key); // fall through to recompute
            }
        }
        std::vector<double> vec =
            with_retries([&] { return backend_->embed(cfg_.model_name, text); }, key);
        cache_.store(key, cfg_.model_name, text, nlohmann::json(vec).dump());
        return vec;
    }

    /// Runs every questionnaire of the bank against the subject's transcript,
    /// one request per topic set (sets larger than five questions are chunked,
    /// order preserved). Unparseable chunks are retried once past the cache,
    /// then imputed with the scale midpoint and flagged.
    AnswerVector answer_subject(const Subject& subject, const QuestionnaireBank& bank) {
        if (bank.size() == 0) throw Error("answer_subject: empty bank");
        AnswerVector out;
        out.subject_id = subject.subject_id;
        out.values.assign(bank.size(), 0);
        out.provenance.assign(bank.size(), Provenance::Parsed);

        const size_t chunk_size = cfg_.per_question ? 1 : kQuestionsPerRequest;
        for (const auto& group : bank.topic_groups()) {
            for (size_t begin = 0; begin < group.size(); begin += chunk_size) {
                size_t end = std::min(group.size(), begin + chunk_size);
                std::vector<Question> chunk;
                for (size_t i = begin; i < end; ++i) chunk.push_back(*group[i]);

                PromptRequest req = build_impersonation_prompt(subject.transcript, chunk);
                const int smin = chunk.front().scale_min;
                const int smax = chunk.front().scale_max;
                std::vector<int> values;
                bool parsed = true;
                try {
                    values = parse_answers(complete(req), static_cast<int>(chunk.size()), smin, smax);
                } catch (const ParseFailure&) {
                    try {
                        values = parse_answers(complete(req, /*bypass_cache=*/true),
                                               static_cast<int>(chunk.size()), smin, smax);
                    } catch (const ParseFailure&) {
                        parsed = false;
                        values.assign(chunk.size(),
                                      static_cast<int>(std::lround((smin + smax) / 2.0)));
                    }
                }
                for (size_t i = 0; i < chunk.size(); ++i) {
                    out.values[chunk[i].ordinal] = values[i];
                    out.provenance[chunk[i].ordinal] =
                        parsed ? Provenance::Parsed : Provenance::Imputed;
                }
            }
        }
        return out;
    }

    static constexpr size_t kQuestionsPerRequest = 5;

private:
    template <typename Fn>
    auto with_retries(Fn&& fn, const std::string& key) -> decltype(fn()) {
        const int attempts = cfg_.max_retries + 1;
        for (int attempt = 0;; ++attempt) {
            try {
                return fn();
            } catch (const TransportError& e) {
                if (attempt + 1 >= attempts)
                    throw Error("retries exhausted after " + std::to_string(attempts) +
                                " attempts: " + e.what());
                int delay = cfg_.retry_base_ms << attempt;
                int jitter = static_cast<int>(
                    hash_unit(fnv1a64(key, splitmix64(static_cast<uint64_t>(attempt)))) *
                    (cfg_.retry_base_ms / 2.0 + 1.0));
                std::this_thread::sleep_for(std::chrono::milliseconds(delay + jitter));
            }
        }
    }

    BackendConfig cfg_;
    std::unique_ptr<CompletionBackend> backend_;
    CompletionCache cache_;
};

} // namespace lmiq
