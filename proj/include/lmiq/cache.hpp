#pragma once

#include "lmiq/util.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace lmiq {

/// Completion cache keyed by sha256(model, rendered prompt). One file per key
/// under the cache directory, named by the hex digest; writes are
/// temp-then-rename so concurrent same-key stores are idempotent. A process-
/// local map fronts the directory. With no directory configured the map alone
/// serves the process.
class CompletionCache {
public:
    explicit CompletionCache(std::filesystem::path dir = {}) : dir_(std::move(dir)) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    static std::string key(const std::string& model, const std::string& rendered) {
        return sha256_hex(model + '\x00' + rendered);
    }

    std::optional<std::string> lookup(const std::string& key_hash) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key_hash);
            if (it != memo_.end()) {
                hits_.fetch_add(1);
                return it->second;
            }
        }
        if (!dir_.empty()) {
            std::filesystem::path file = dir_ / key_hash;
            if (std::filesystem::exists(file)) {
                try {
                    nlohmann::json doc = nlohmann::json::parse(read_file(file));
                    std::string completion = doc.at("completion").get<std::string>();
                    std::lock_guard<std::mutex> lock(mutex_);
                    memo_[key_hash] = completion;
                    hits_.fetch_add(1);
                    return completion;
                } catch (const std::exception&) {
                    // Corrupt entry: fall through and let the caller refresh it.
                }
            }
        }
        misses_.fetch_add(1);
        return std::nullopt;
    }

    void store(const std::string& key_hash, const std::string& model,
               const std::string& rendered, const std::string& completion) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            memo_[key_hash] = completion;
        }
        if (dir_.empty()) return;
        nlohmann::json doc;
        doc["request_hash"] = key_hash;
        doc["model"] = model;
        doc["rendered"] = rendered;
        doc["completion"] = completion;
        doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
        atomic_write_file(dir_ / key_hash, doc.dump(2));
    }

    void forget(const std::string& key_hash) {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.erase(key_hash);
    }

    uint64_t hits() const { return hits_.load(); }
    uint64_t misses() const { return misses_.load(); }
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::mutex mutex_;
    std::unordered_map<std::string, std::string> memo_;
    std::atomic<uint64_t> hits_{0};
    std::atomic<uint64_t> misses_{0};
};

} // namespace lmiq
