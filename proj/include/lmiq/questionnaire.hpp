#pragma once

#include "lmiq/errors.hpp"
#include "lmiq/util.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lmiq {

enum class Domain { MentalHealth, Personality, Therapeutic, Direct };

inline constexpr std::array<Domain, 4> kAllDomains = {
    Domain::MentalHealth, Domain::Personality, Domain::Therapeutic, Domain::Direct};

inline const char* domain_key(Domain d) {
    switch (d) {
        case Domain::MentalHealth: return "mental_health";
        case Domain::Personality: return "personality";
        case Domain::Therapeutic: return "therapeutic";
        case Domain::Direct: return "direct";
    }
    return "unknown";
}

// Accepts both the bank-file keys and the short CLI tokens (mh, pers, ther, direct).
inline Domain domain_from_string(const std::string& raw) {
    std::string s = to_lower(trim(raw));
    if (s == "mental_health" || s == "mh" || s == "mentalhealth" || s == "mental health")
        return Domain::MentalHealth;
    if (s == "personality" || s == "pers") return Domain::Personality;
    if (s == "therapeutic" || s == "ther") return Domain::Therapeutic;
    if (s == "direct") return Domain::Direct;
    throw Error("unknown domain: '" + raw + "'");
}

using DomainMask = std::set<Domain>;

inline DomainMask full_domain_mask() {
    return {Domain::MentalHealth, Domain::Personality, Domain::Therapeutic, Domain::Direct};
}

inline DomainMask parse_domain_mask(const std::string& csv) {
    DomainMask mask;
    for (const auto& part : split(csv, ',')) {
        if (trim(part).empty()) continue;
        mask.insert(domain_from_string(part));
    }
    return mask;
}

inline std::string mask_to_string(const DomainMask& mask) {
    static const std::map<Domain, std::string> short_keys = {
        {Domain::MentalHealth, "mh"},
        {Domain::Personality, "pers"},
        {Domain::Therapeutic, "ther"},
        {Domain::Direct, "direct"}};
    std::string out;
    for (Domain d : kAllDomains) {
        if (!mask.count(d)) continue;
        if (!out.empty()) out += ",";
        out += short_keys.at(d);
    }
    return out;
}

struct Question {
    std::string id;
    std::string text;
    std::string topic;
    Domain domain = Domain::MentalHealth;
    int scale_min = 1;
    int scale_max = 5;
    int ordinal = 0; // position in canonical order, assigned by the bank
    bool excluded_by_default = false;
};

/// Ordered question bank. Ordering is canonical and stable: domains in the
/// fixed order mental_health, personality, therapeutic, direct; within a
/// domain, file listing order. Immutable after load.
class QuestionnaireBank {
public:
    static QuestionnaireBank parse(const std::string& json_text, std::string name,
                                   bool include_excluded = false) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw Error("bank parse error (" + name + "): " + e.what());
        }
        if (!doc.contains("questions") || !doc["questions"].is_array())
            throw Error("bank parse error (" + name + "): missing 'questions' array");

        std::vector<Question> questions;
        std::set<std::string> seen_ids;
        for (const auto& jq : doc["questions"]) {
            Question q;
            q.id = jq.at("id").get<std::string>();
            q.domain = domain_from_string(jq.at("domain").get<std::string>());
            q.topic = jq.at("topic").get<std::string>();
            q.text = jq.at("text").get<std::string>();
            q.scale_min = jq.value("scale_min", 1);
            q.scale_max = jq.value("scale_max", 5);
            q.excluded_by_default = jq.value("excluded_by_default", false);
            if (q.id.empty()) throw Error("bank '" + name + "': empty question id");
            if (q.text.empty()) throw Error("bank '" + name + "': empty text for " + q.id);
            if (q.topic.empty()) throw Error("bank '" + name + "': empty topic for " + q.id);
            if (q.scale_min >= q.scale_max)
                throw Error("bank '" + name + "': invalid scale for " + q.id);
            if (!seen_ids.insert(q.id).second)
                throw Error("bank '" + name + "': duplicate id '" + q.id + "'");
            if (q.excluded_by_default && !include_excluded) continue;
            questions.push_back(std::move(q));
        }
        if (questions.empty()) throw Error("bank '" + name + "': empty bank");
        return QuestionnaireBank(std::move(questions), std::move(name));
    }

    static QuestionnaireBank load_file(const std::filesystem::path& path,
                                       bool include_excluded = false) {
        return parse(read_file(path), path.filename().string(), include_excluded);
    }

    static QuestionnaireBank load_default(bool include_excluded = false);

    const std::string& name() const { return name_; }
    const std::vector<Question>& questions() const { return questions_; }
    size_t size() const { return questions_.size(); }

    const Question& by_ordinal(int ordinal) const { return questions_.at(ordinal); }

    const Question* find(const std::string& id) const {
        for (const auto& q : questions_)
            if (q.id == id) return &q;
        return nullptr;
    }

    std::map<Domain, int> domain_counts() const {
        std::map<Domain, int> counts;
        for (const auto& q : questions_) counts[q.domain]++;
        return counts;
    }

    /// Sub-bank with only the masked domains, relative order preserved,
    /// ordinals reassigned from zero.
    QuestionnaireBank masked(const DomainMask& mask) const {
        if (mask.empty()) throw Error("empty mask");
        std::vector<Question> kept;
        for (const auto& q : questions_)
            if (mask.count(q.domain)) kept.push_back(q);
        if (kept.empty()) throw Error("mask selects no questions");
        return QuestionnaireBank(std::move(kept), name_ + "[" + mask_to_string(mask) + "]");
    }

    /// Sub-bank holding one topic's questionnaire, ordinals reassigned.
    QuestionnaireBank topic_subset(const std::string& topic) const {
        std::vector<Question> kept;
        for (const auto& q : questions_)
            if (q.topic == topic) kept.push_back(q);
        if (kept.empty()) throw Error("no questions with topic '" + topic + "'");
        return QuestionnaireBank(std::move(kept), name_ + "[" + topic + "]");
    }

    /// Topics in canonical order; each entry holds that topic's questions in order.
    std::vector<std::vector<const Question*>> topic_groups() const {
        std::vector<std::vector<const Question*>> groups;
        std::map<std::pair<Domain, std::string>, size_t> index;
        for (const auto& q : questions_) {
            auto key = std::make_pair(q.domain, q.topic);
            auto it = index.find(key);
            if (it == index.end()) {
                index.emplace(key, groups.size());
                groups.push_back({&q});
            } else {
                groups[it->second].push_back(&q);
            }
        }
        return groups;
    }

    std::string to_json() const {
        nlohmann::json doc;
        doc["name"] = name_;
        doc["questions"] = nlohmann::json::array();
        for (const auto& q : questions_) {
            nlohmann::json jq;
            jq["id"] = q.id;
            jq["domain"] = domain_key(q.domain);
            jq["topic"] = q.topic;
            jq["text"] = q.text;
            jq["scale_min"] = q.scale_min;
            jq["scale_max"] = q.scale_max;
            jq["excluded_by_default"] = q.excluded_by_default;
            doc["questions"].push_back(std::move(jq));
        }
        return doc.dump(2);
    }

    // Content hash over the canonical ordering; reports carry it so results
    // are traceable to the exact bank used.
    std::string sha256() const {
        std::string acc;
        for (const auto& q : questions_) {
            acc += q.id;
            acc += '\x1f';
            acc += q.text;
            acc += '\x1e';
        }
        return sha256_hex(acc);
    }

private:
    QuestionnaireBank(std::vector<Question> questions, std::string name)
        : questions_(std::move(questions)), name_(std::move(name)) {
        std::stable_sort(questions_.begin(), questions_.end(),
                         [](const Question& a, const Question& b) {
                             return static_cast<int>(a.domain) < static_cast<int>(b.domain);
                         });
        for (size_t i = 0; i < questions_.size(); ++i)
            questions_[i].ordinal = static_cast<int>(i);
    }

    std::vector<Question> questions_;
    std::string name_;
};

} // namespace lmiq
