#pragma once

#include "lmiq/backend.hpp"

#include <atomic>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lmiq::testing {

// Counts calls, delegates to an inner backend.
class CountingBackend : public CompletionBackend {
public:
    explicit CountingBackend(std::unique_ptr<CompletionBackend> inner,
                             std::shared_ptr<std::atomic<int>> completions,
                             std::shared_ptr<std::atomic<int>> embeds = nullptr)
        : inner_(std::move(inner)), completions_(std::move(completions)), embeds_(std::move(embeds)) {}

    std::string name() const override { return "counting:" + inner_->name(); }

    std::string complete(const std::string& model, const std::string& prompt) override {
        completions_->fetch_add(1);
        return inner_->complete(model, prompt);
    }

    std::vector<double> embed(const std::string& model, const std::string& text) override {
        if (embeds_) embeds_->fetch_add(1);
        return inner_->embed(model, text);
    }

private:
    std::unique_ptr<CompletionBackend> inner_;
    std::shared_ptr<std::atomic<int>> completions_;
    std::shared_ptr<std::atomic<int>> embeds_;
};

// Replies from a fixed queue, in order; repeats the last entry once drained.
class ScriptedBackend : public CompletionBackend {
public:
    explicit ScriptedBackend(std::vector<std::string> replies) : replies_(std::move(replies)) {}

    std::string name() const override { return "scripted"; }

    std::string complete(const std::string&, const std::string&) override {
        size_t i = next_.fetch_add(1);
        if (i >= replies_.size()) i = replies_.size() - 1;
        return replies_[i];
    }

    std::vector<double> embed(const std::string&, const std::string&) override {
        return {0.0};
    }

private:
    std::vector<std::string> replies_;
    std::atomic<size_t> next_{0};
};

// Throws TransportError for the first `fail_count` completions, then succeeds.
class FlakyBackend : public CompletionBackend {
public:
    FlakyBackend(int fail_count, std::string reply,
                 std::shared_ptr<std::atomic<int>> attempts)
        : fail_count_(fail_count), reply_(std::move(reply)), attempts_(std::move(attempts)) {}

    std::string name() const override { return "flaky"; }

    std::string complete(const std::string&, const std::string&) override {
        int attempt = attempts_->fetch_add(1);
        if (attempt < fail_count_) throw TransportError("connection reset");
        return reply_;
    }

    std::vector<double> embed(const std::string&, const std::string&) override {
        throw TransportError("connection reset");
    }

private:
    int fail_count_;
    std::string reply_;
    std::shared_ptr<std::atomic<int>> attempts_;
};

} // namespace lmiq::testing
