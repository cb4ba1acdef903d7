#pragma once

#include "lmiq/errors.hpp"
#include "lmiq/mock_lexicon.hpp"
#include "lmiq/util.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace lmiq {

enum class Split { Train, Dev, Test };

inline const char* split_key(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Dev: return "dev";
        case Split::Test: return "test";
    }
    return "unknown";
}

inline Split split_from_string(const std::string& raw) {
    std::string s = to_lower(trim(raw));
    if (s == "train" || s == "training") return Split::Train;
    if (s == "dev" || s == "development" || s == "val" || s == "validation") return Split::Dev;
    if (s == "test") return Split::Test;
    throw Error("unknown split: '" + raw + "'");
}

struct Subject {
    std::string subject_id;
    std::string transcript;
    int phq8 = 0;   // 0..24
    int pcl_c = 17; // 17..85
    Split split = Split::Train;
};

inline void validate_subject(const Subject& s, const std::string& where) {
    if (s.subject_id.empty()) throw Error(where + ": empty subject_id");
    if (s.phq8 < 0 || s.phq8 > 24)
        throw Error(where + ": phq8 out of range [0,24]: " + std::to_string(s.phq8));
    if (s.pcl_c < 17 || s.pcl_c > 85)
        throw Error(where + ": pcl_c out of range [17,85]: " + std::to_string(s.pcl_c));
    if (s.transcript.empty()) throw Error(where + ": empty transcript");
}

/// Immutable after ingest. Transcripts are passed to the prompt builders
/// as-is, interviewer lines included.
struct Corpus {
    std::string name;
    std::vector<Subject> subjects;

    static constexpr const char* kManifestHeader = "subject_id,phq8,pcl_c,split,transcript_path";

    std::vector<const Subject*> split_subjects(Split split) const {
        std::vector<const Subject*> out;
        for (const auto& s : subjects)
            if (s.split == split) out.push_back(&s);
        return out;
    }

    const Subject* find(const std::string& subject_id) const {
        for (const auto& s : subjects)
            if (s.subject_id == subject_id) return &s;
        return nullptr;
    }

    /// Loads `labels` (CSV: subject_id,phq8,pcl_c,split,transcript_path) and the
    /// transcript files it references, which resolve relative to `root`.
    static Corpus ingest(const std::filesystem::path& root, const std::filesystem::path& labels) {
        std::string manifest = read_file(labels);
        std::vector<std::string> lines = split(manifest, '\n');
        if (lines.empty()) throw Error("empty manifest: " + labels.string());

        Corpus corpus;
        corpus.name = labels.stem().string();
        std::set<std::string> seen;
        bool header_checked = false;
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string line = trim(lines[i]);
            if (line.empty()) continue;
            std::string where = labels.filename().string() + ":" + std::to_string(i + 1);
            if (!header_checked) {
                if (line != kManifestHeader)
                    throw Error(where + ": expected header '" + std::string(kManifestHeader) + "'");
                header_checked = true;
                continue;
            }
            std::vector<std::string> cols = split(line, ',');
            if (cols.size() != 5)
                throw Error(where + ": malformed row, expected 5 columns, got " +
                            std::to_string(cols.size()));
            Subject s;
            s.subject_id = trim(cols[0]);
            try {
                s.phq8 = std::stoi(trim(cols[1]));
                s.pcl_c = std::stoi(trim(cols[2]));
            } catch (const std::exception&) {
                throw Error(where + ": malformed score");
            }
            s.split = split_from_string(cols[3]);
            std::filesystem::path tpath(trim(cols[4]));
            if (tpath.is_relative()) tpath = root / tpath;
            if (!std::filesystem::exists(tpath))
                throw Error(where + ": transcript file not found: " + tpath.string());
            s.transcript = read_file(tpath);
            validate_subject(s, where);
            if (!seen.insert(s.subject_id).second)
                throw Error(where + ": duplicate id '" + s.subject_id + "'");
            corpus.subjects.push_back(std::move(s));
        }
        if (corpus.subjects.empty()) throw Error("manifest has no rows: " + labels.string());
        return corpus;
    }

    /// Writes transcripts/<id>.txt plus labels.csv under `root`;
    /// ingest(root, root/"labels.csv") round-trips.
    void save(const std::filesystem::path& root) const {
        std::filesystem::create_directories(root / "transcripts");
        std::string manifest = std::string(kManifestHeader) + "\n";
        for (const auto& s : subjects) {
            std::string rel = "transcripts/" + s.subject_id + ".txt";
            atomic_write_file(root / rel, s.transcript);
            manifest += s.subject_id + "," + std::to_string(s.phq8) + "," +
                        std::to_string(s.pcl_c) + "," + split_key(s.split) + "," + rel + "\n";
        }
        atomic_write_file(root / "labels.csv", manifest);
    }
};

namespace synth {

// Questions whose marker tokens the generator plants; end-to-end tests expect
// these to surface as top random-forest importances.
inline const char* informative_question_id_phq8() { return "mh.mdd.1"; }
inline const char* informative_question_id_pclc() { return "ther.trauma.3"; }

inline int planted_depression_count(int phq8) {
    return static_cast<int>(std::lround(0.8 * phq8));
}
inline int planted_trauma_count(int pcl_c) {
    return static_cast<int>(std::lround(0.3 * (pcl_c - 17)));
}

} // namespace synth

/// Deterministic synthetic corpus for offline runs: labels are uniform, and
/// each transcript carries the mock lexicon's marker tokens at a rate affine
/// in the label, so the mock backend can recover the signal. Splits 60/20/20.
inline Corpus generate_synthetic(int n, uint64_t seed) {
    if (n < 3) throw Error("synthetic corpus needs n >= 3, got " + std::to_string(n));

    static const std::vector<std::string> kFiller = {
        "I have been keeping busy with work most days.",
        "My commute is long but I listen to music on the way.",
        "I usually cook dinner at home and watch television afterwards.",
        "On weekends I try to visit the park near my apartment.",
        "I talk to my sister on the phone about once a week.",
        "Work has been steady, the projects keep me occupied.",
        "I started reading a novel a friend recommended to me.",
        "The weather has been nice enough to walk in the evenings.",
        "I have a small garden on the balcony that I water daily.",
        "My neighbors are friendly and we chat in the hallway sometimes.",
        "I have been trying to save money for a trip next year.",
        "Most mornings I have coffee and check the news before leaving.",
        "I play cards with a couple of friends every other week.",
        "The apartment needs some repairs but it is comfortable overall.",
        "I took up jogging for a while although I am not consistent.",
        "My manager is reasonable and the hours are predictable.",
    };
    static const std::vector<std::string> kDepressionLines = {
        "Lately things feel hopeless no matter what I try.",
        "I keep telling myself it is hopeless to expect any change.",
        "Some mornings everything just seems hopeless to me.",
        "It feels hopeless when I think about the months ahead.",
    };
    static const std::vector<std::string> kTraumaLines = {
        "The flashbacks come back at night when it is quiet.",
        "I still get flashbacks to what happened back then.",
        "Loud noises can set off the flashbacks without warning.",
        "The flashbacks make it hard to stay in crowded rooms.",
    };
    static const std::vector<std::string> kInterviewerLines = {
        "Interviewer: How have you been feeling lately?",
        "Interviewer: Can you tell me more about that?",
        "Interviewer: What does a typical day look like for you?",
    };

    std::mt19937_64 eng(seed);
    auto pick = [&eng](size_t n_options) { return static_cast<size_t>(eng() % n_options); };

    Corpus corpus;
    corpus.name = "synthetic-n" + std::to_string(n) + "-seed" + std::to_string(seed);

    int n_dev = std::max(1, n / 5);
    int n_test = std::max(1, n / 5);
    int n_train = n - n_dev - n_test;

    for (int i = 0; i < n; ++i) {
        Subject s;
        char idbuf[16];
        std::snprintf(idbuf, sizeof(idbuf), "synth-%03d", i + 1);
        s.subject_id = idbuf;
        s.phq8 = static_cast<int>(eng() % 25);
        s.pcl_c = 17 + static_cast<int>(eng() % 69);
        s.split = i < n_train ? Split::Train : (i < n_train + n_dev ? Split::Dev : Split::Test);

        std::vector<std::string> lines;
        lines.push_back(kInterviewerLines[pick(kInterviewerLines.size())]);
        int filler_count = 14 + static_cast<int>(eng() % 4);
        for (int f = 0; f < filler_count; ++f)
            lines.push_back("Participant: " + kFiller[pick(kFiller.size())]);
        for (int k = 0; k < synth::planted_depression_count(s.phq8); ++k)
            lines.push_back("Participant: " + kDepressionLines[pick(kDepressionLines.size())]);
        for (int k = 0; k < synth::planted_trauma_count(s.pcl_c); ++k)
            lines.push_back("Participant: " + kTraumaLines[pick(kTraumaLines.size())]);
        // Deterministic Fisher-Yates; keep the interviewer opener in place.
        for (size_t j = lines.size() - 1; j >= 2; --j) {
            size_t r = 1 + static_cast<size_t>(eng() % j);
            std::swap(lines[j], lines[r]);
        }
        std::string transcript;
        for (const auto& line : lines) {
            transcript += line;
            transcript += '\n';
        }
        s.transcript = std::move(transcript);
        validate_subject(s, s.subject_id);
        corpus.subjects.push_back(std::move(s));
    }
    return corpus;
}

} // namespace lmiq
