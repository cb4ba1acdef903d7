#pragma once

#include "lmiq/errors.hpp"
#include "lmiq/questionnaire.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lmiq {

enum class PromptKind { Impersonate, Analyze, DirectPredict };

enum class Instrument { PHQ8, PCLC };

inline const char* instrument_name(Instrument ins) {
    return ins == Instrument::PHQ8 ? "PHQ-8" : "PCL-C";
}

struct PromptRequest {
    PromptKind kind = PromptKind::Impersonate;
    std::string transcript;
    std::vector<Question> questions;            // Impersonate only
    std::optional<Instrument> instrument;       // DirectPredict only
    std::string rendered;
};

namespace prompt_text {

inline constexpr const char* kImpersonationPreamble =
    "Analyze a therapist-subject conversation transcript and related psychological "
    "questionnaire questions. Focus on understanding the subject's mental health by examining "
    "their dialogue for both explicit and implicit cues. Pay attention to signs of depression, "
    "PTSD, and other conditions, but also note the absence of these symptoms.\n\n"
    "Your task is to provide answers to the questionnaire as if you were the subject, based on "
    "insights from the conversation. Ensure your responses are balanced, reflecting the "
    "subject's mental state as suggested by the transcript. Make informed deductions about the "
    "subject's emotional state, stress management, life satisfaction, social interactions, and "
    "professional aspirations, providing answers that reflect mental health issues or a neutral "
    "state as indicated by the transcript.\n\n";

inline constexpr const char* kAnalysisPreamble =
    "Analyze a therapist-subject conversation transcript. Focus on the clear and comprehensible "
    "parts of the subject's dialogue, as the therapist's words are omitted and there may be "
    "gaps due to recording issues. Your analysis should identify key statements or moments that "
    "reveal aspects of the subject's mental health, with particular attention to signs of "
    "depression and PTSD. Prioritize brevity and clarity in your analysis. Look for indicators "
    "of the subject's emotional state, stress management, life satisfaction, social "
    "interactions, and professional aspirations. Assess the intensity of these elements, "
    "capturing the range from mild to profound, based on the subject's expressions.\n\n"
    "Ensure your analysis remains accurate and relevant to the transcript, avoiding unfounded "
    "assumptions or 'hallucinations'. Summarize your findings clearly and directly, using "
    "concise sentences that reflect the nuances of the subject's mental state. Disregard "
    "unclear or incomplete segments due to recording issues, and avoid structural phrases or "
    "introductions to maintain data integrity for subsequent embedding generation. The "
    "accuracy, clarity, and nuanced understanding of intensity in your summary are "
    "paramount.\n";

} // namespace prompt_text

/// One questionnaire per request: all questions must share a topic. The scale
/// range is taken from the first question.
inline PromptRequest build_impersonation_prompt(const std::string& transcript,
                                                const std::vector<Question>& questions) {
    if (transcript.empty()) throw Error("impersonation prompt: empty transcript");
    if (questions.empty()) throw Error("impersonation prompt: empty question list");
    const std::string& topic = questions.front().topic;
    for (const auto& q : questions)
        if (q.topic != topic)
            throw Error("impersonation prompt: mixed topics '" + topic + "' and '" + q.topic + "'");

    PromptRequest req;
    req.kind = PromptKind::Impersonate;
    req.transcript = transcript;
    req.questions = questions;

    std::string agreement_range = std::to_string(questions.front().scale_min) + "-" +
                                  std::to_string(questions.front().scale_max);
    std::string rendered = prompt_text::kImpersonationPreamble;
    rendered += "Transcript: " + transcript + "\n";
    rendered += "Answer the questions with an agreement level ranging from " + agreement_range + ".\n";
    rendered += "Questions:\n";
    for (size_t i = 0; i < questions.size(); ++i)
        rendered += std::to_string(i + 1) + ". " + questions[i].text + "\n";
    req.rendered = std::move(rendered);
    return req;
}

inline PromptRequest build_analysis_prompt(const std::string& transcript) {
    if (transcript.empty()) throw Error("analysis prompt: empty transcript");
    PromptRequest req;
    req.kind = PromptKind::Analyze;
    req.transcript = transcript;
    req.rendered = std::string(prompt_text::kAnalysisPreamble) + "Conversation transcript: " + transcript;
    return req;
}

inline PromptRequest build_direct_prediction_prompt(const std::string& transcript, Instrument ins) {
    if (transcript.empty()) throw Error("direct prediction prompt: empty transcript");
    PromptRequest req;
    req.kind = PromptKind::DirectPredict;
    req.transcript = transcript;
    req.instrument = ins;
    req.rendered = std::string("Based on the following clinical interview, what do you estimate "
                               "the Participant's ") +
                   instrument_name(ins) +
                   " score is? Reply with the single most likely score.\n\n"
                   "Clinical interview: " +
                   transcript;
    return req;
}

} // namespace lmiq
