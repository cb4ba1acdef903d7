#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lmiq::mock {

// The mock backend scores a question by how often its marker token occurs in
// the transcript, mapped through a sigmoid onto the answer scale:
//
//   answer = clamp(1 + round(4 * sigmoid(kDensityGain * density - kDensityBias)
//                              + jitter), scale_min, scale_max)
//
// density = marker occurrences / transcript tokens, jitter is deterministic in
// [-kJitterAmplitude, +kJitterAmplitude] from (question text, transcript, seed).
// The synthetic corpus generator plants these marker tokens at label-dependent
// rates, so the two halves together give end-to-end tests a recoverable signal.
inline constexpr double kDensityGain = 100.0;
inline constexpr double kDensityBias = 2.5;
inline constexpr double kJitterAmplitude = 0.75;

inline constexpr std::string_view kDepressionMarker = "hopeless";
inline constexpr std::string_view kTraumaMarker = "flashbacks";

inline std::optional<std::string> marker_token_for(std::string_view question_text) {
    if (question_text == "Do you often feel hopeless or helpless?" ||
        question_text == "How much are you feeling down, depressed, or hopeless?")
        return std::string(kDepressionMarker);
    if (question_text == "Do you often think about or have flashbacks to this traumatic event?" ||
        question_text ==
            "How much are you re-experiencing disturbing memories, thoughts, or images of a "
            "stressful experience from the past?")
        return std::string(kTraumaMarker);
    return std::nullopt;
}

} // namespace lmiq::mock
