#pragma once

#include "lmiq/errors.hpp"
#include "lmiq/mock_lexicon.hpp"
#include "lmiq/prompts.hpp"
#include "lmiq/util.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lmiq {

enum class BackendKind { Mock, HttpCompletion };

inline BackendKind backend_kind_from_string(const std::string& raw) {
    std::string s = to_lower(trim(raw));
    if (s == "mock") return BackendKind::Mock;
    if (s == "http" || s == "httpcompletion") return BackendKind::HttpCompletion;
    throw Error("unknown backend: '" + raw + "'");
}

struct BackendConfig {
    BackendKind backend = BackendKind::Mock;
    std::string model_name = "mock-impersonator";
    std::optional<double> temperature; // unset: backend default
    int max_retries = 4;
    int max_parallel = 4;
    std::filesystem::path cache_dir;   // empty: in-memory caching only
    int retry_base_ms = 1000;          // backoff: base * 2^attempt, jittered
    bool per_question = false;         // one request per question instead of per set
    int mock_embed_dim = 256;
    uint64_t mock_seed = 0;
    std::string api_base;              // falls back to LMIQ_API_BASE, then api.openai.com/v1
    std::string api_style = "completions"; // or "chat"
};

class CompletionBackend {
public:
    virtual ~CompletionBackend() = default;
    virtual std::string complete(const std::string& model, const std::string& prompt) = 0;
    virtual std::vector<double> embed(const std::string& model, const std::string& text) = 0;
    virtual std::string name() const = 0;
};

/// Offline stand-in for an LLM endpoint. Strictly a pure function of
/// (prompt text, seed): it recovers the transcript and questions from the
/// rendered prompt and scores marker-token density per mock_lexicon.hpp.
class MockBackend : public CompletionBackend {
public:
    explicit MockBackend(uint64_t seed = 0, int embed_dim = 256)
        : seed_(seed), embed_dim_(embed_dim) {}

    std::string name() const override { return "mock"; }

    std::string complete(const std::string& /*model*/, const std::string& prompt) override {
        if (prompt.find("Answer the questions with an agreement level ranging from") !=
            std::string::npos)
            return impersonate_reply(prompt);
        if (prompt.find("avoiding unfounded assumptions") != std::string::npos)
            return analyze_reply(prompt);
        if (prompt.find("what do you estimate") != std::string::npos)
            return direct_predict_reply(prompt);
        return "ok " + sha256_hex(prompt).substr(0, 12);
    }

    std::vector<double> embed(const std::string& /*model*/, const std::string& text) override {
        if (text.empty()) throw Error("embed: empty text");
        // Signed hashed bag-of-words, L2-normalized.
        std::vector<double> acc(static_cast<size_t>(embed_dim_), 0.0);
        for (const auto& tok : tokenize(text)) {
            uint64_t h = fnv1a64(tok, splitmix64(seed_ ^ 0x5eedULL));
            size_t idx = static_cast<size_t>(h % static_cast<uint64_t>(embed_dim_));
            acc[idx] += (h >> 32) & 1 ? 1.0 : -1.0;
        }
        double norm = 0.0;
        for (double v : acc) norm += v * v;
        if (norm > 0.0) {
            norm = std::sqrt(norm);
            for (double& v : acc) v /= norm;
        }
        return acc;
    }

private:
    static double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

    static double marker_density(const std::string& transcript, std::string_view marker) {
        std::vector<std::string> toks = tokenize(transcript);
        if (toks.empty()) return 0.0;
        size_t count = 0;
        for (const auto& t : toks)
            if (t == marker) ++count;
        return static_cast<double>(count) / static_cast<double>(toks.size());
    }

    double jitter(const std::string& question_text, const std::string& transcript) const {
        uint64_t h = fnv1a64(question_text, fnv1a64(transcript, splitmix64(seed_)));
        return (hash_unit(h) * 2.0 - 1.0) * mock::kJitterAmplitude;
    }

    static std::string slice_between(const std::string& text, const std::string& begin,
                                     const std::string& end) {
        size_t b = text.find(begin);
        if (b == std::string::npos) return {};
        b += begin.size();
        size_t e = end.empty() ? std::string::npos : text.find(end, b);
        return text.substr(b, e == std::string::npos ? std::string::npos : e - b);
    }

    std::string impersonate_reply(const std::string& prompt) const {
        std::string transcript = slice_between(
            prompt, "Transcript: ", "\nAnswer the questions with an agreement level");
        std::string range =
            slice_between(prompt, "agreement level ranging from ", ".\nQuestions:");
        int scale_min = 1, scale_max = 5;
        if (size_t dash = range.find('-'); dash != std::string::npos) {
            scale_min = std::atoi(range.substr(0, dash).c_str());
            scale_max = std::atoi(range.substr(dash + 1).c_str());
        }
        std::string out = "Answers:\n";
        size_t qpos = prompt.find("Questions:\n");
        int index = 0;
        if (qpos != std::string::npos) {
            for (const auto& line : split(prompt.substr(qpos + 11), '\n')) {
                std::string t = trim(line);
                size_t dot = t.find(". ");
                if (t.empty() || dot == std::string::npos) continue;
                std::string question_text = t.substr(dot + 2);
                ++index;
                double density = 0.0;
                if (auto marker = mock::marker_token_for(question_text))
                    density = marker_density(transcript, *marker);
                double base = (scale_max - scale_min) *
                              sigmoid(mock::kDensityGain * density - mock::kDensityBias);
                long a = scale_min + std::lround(base + jitter(question_text, transcript));
                a = std::clamp<long>(a, scale_min, scale_max);
                out += std::to_string(index) + ". " + std::to_string(a) + "\n";
            }
        }
        return out;
    }

    std::string analyze_reply(const std::string& prompt) const {
        std::string transcript = slice_between(prompt, "Conversation transcript: ", "");
        static const char* kLevels[] = {"minimal", "mild", "moderate", "marked", "severe"};
        auto level = [&](std::string_view marker) {
            double s = sigmoid(mock::kDensityGain * marker_density(transcript, marker) -
                               mock::kDensityBias);
            return kLevels[std::clamp(static_cast<int>(s * 5.0), 0, 4)];
        };
        std::string out = "The subject describes daily routines, work, and family contact. ";
        out += std::string("Low-mood indicators appear ") + level(mock::kDepressionMarker) + ". ";
        out += std::string("Trauma re-experiencing appears ") + level(mock::kTraumaMarker) + ". ";
        out += "Sleep, appetite, and social engagement are mentioned in passing.";
        return out;
    }

    std::string direct_predict_reply(const std::string& prompt) const {
        std::string transcript = slice_between(prompt, "Clinical interview: ", "");
        bool phq = prompt.find("PHQ-8") != std::string::npos;
        int lo = phq ? 0 : 17;
        int hi = phq ? 24 : 85;
        std::string_view marker = phq ? mock::kDepressionMarker : mock::kTraumaMarker;
        double s = sigmoid(mock::kDensityGain * marker_density(transcript, marker) -
                           mock::kDensityBias);
        long est = lo + std::lround((hi - lo) * s + 2.0 * jitter(prompt.substr(0, 40), transcript));
        est = std::clamp<long>(est, lo, hi);
        return std::string("Looking at the interview as a whole, I estimate the Participant's ") +
               (phq ? "PHQ-8" : "PCL-C") + " score is " + std::to_string(est) +
               ". The tone and content of the answers suggest this severity level.";
    }

    uint64_t seed_;
    int embed_dim_;
};

/// OpenAI-compatible HTTP client. Completion endpoint style is configurable:
/// "completions" posts {model, prompt} to /completions, "chat" posts a single
/// user message to /chat/completions. Embeddings go to /embeddings.
class HttpCompletionBackend : public CompletionBackend {
public:
    explicit HttpCompletionBackend(const BackendConfig& cfg) : cfg_(cfg) {
        std::string base = cfg.api_base;
        if (base.empty())
            if (const char* env = std::getenv("LMIQ_API_BASE")) base = env;
        if (base.empty()) base = "https://api.openai.com/v1";
        size_t scheme = base.find("://");
        size_t path_start = scheme == std::string::npos ? base.find('/')
                                                        : base.find('/', scheme + 3);
        if (path_start == std::string::npos) {
            host_ = base;
        } else {
            host_ = base.substr(0, path_start);
            path_prefix_ = base.substr(path_start);
            while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
        }
        if (const char* key = std::getenv("LMIQ_API_KEY")) api_key_ = key;
    }

    std::string name() const override { return "http:" + host_; }

    std::string complete(const std::string& model, const std::string& prompt) override {
        nlohmann::json body;
        body["model"] = model;
        if (cfg_.temperature) body["temperature"] = *cfg_.temperature;
        const bool chat = cfg_.api_style == "chat";
        std::string path;
        if (chat) {
            path = path_prefix_ + "/chat/completions";
            body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
        } else {
            path = path_prefix_ + "/completions";
            body["prompt"] = prompt;
        }
        nlohmann::json reply = post_json(path, body);
        try {
            const auto& choice = reply.at("choices").at(0);
            return chat ? choice.at("message").at("content").get<std::string>()
                        : choice.at("text").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error("malformed backend reply: " + std::string(e.what()));
        }
    }

    std::vector<double> embed(const std::string& model, const std::string& text) override {
        if (text.empty()) throw Error("embed: empty text");
        nlohmann::json body{{"model", model}, {"input", text}};
        nlohmann::json reply = post_json(path_prefix_ + "/embeddings", body);
        try {
            return reply.at("data").at(0).at("embedding").get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw Error("malformed backend reply: " + std::string(e.what()));
        }
    }

private:
    nlohmann::json post_json(const std::string& path, const nlohmann::json& body) {
        httplib::Client client(host_);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(120, 0);
        httplib::Headers headers;
        if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
        auto res = client.Post(path, headers, body.dump(), "application/json");
        if (!res)
            throw TransportError("transport error talking to " + host_ + path + ": " +
                                 httplib::to_string(res.error()));
        if (res->status == 401 || res->status == 403)
            throw Error("auth failure (" + std::to_string(res->status) +
                        "): set LMIQ_API_KEY for " + host_);
        if (res->status == 429 || res->status >= 500)
            throw TransportError("backend returned status " + std::to_string(res->status));
        if (res->status != 200)
            throw Error("backend returned status " + std::to_string(res->status) + ": " +
                        res->body.substr(0, 200));
        try {
            return nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw Error("malformed backend reply: " + std::string(e.what()));
        }
    }

    BackendConfig cfg_;
    std::string host_;
    std::string path_prefix_;
    std::string api_key_;
};

inline std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& cfg) {
    switch (cfg.backend) {
        case BackendKind::Mock:
            return std::make_unique<MockBackend>(cfg.mock_seed, cfg.mock_embed_dim);
        case BackendKind::HttpCompletion:
            return std::make_unique<HttpCompletionBackend>(cfg);
    }
    throw Error("unknown backend kind");
}

} // namespace lmiq
