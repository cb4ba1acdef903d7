#pragma once

#include "lmiq/questionnaire.hpp"

namespace lmiq {

// Built-in question bank: 70 mental-health, 25 personality, 15 therapeutic and
// 26 direct items (the volunteer-time item is excluded by default, leaving the
// canonical 8-item PHQ-8 and a default total of 135). Same on-disk schema as
// user-supplied bank files; see docs/bank-format in the README.
inline const char* kDefaultBankJson = R"json({
  "name": "builtin-default",
  "questions": [
    {"id": "mh.agoraphobia.1", "domain": "mental_health", "topic": "Agoraphobia", "text": "Do you fear being in open or enclosed spaces?"},
    {"id": "mh.agoraphobia.2", "domain": "mental_health", "topic": "Agoraphobia", "text": "Do you avoid public transportation or being in crowds?"},
    {"id": "mh.agoraphobia.3", "domain": "mental_health", "topic": "Agoraphobia", "text": "Does the thought of leaving your home alone cause you anxiety?"},
    {"id": "mh.agoraphobia.4", "domain": "mental_health", "topic": "Agoraphobia", "text": "How do these fears limit your daily activities or lifestyle?"},
    {"id": "mh.agoraphobia.5", "domain": "mental_health", "topic": "Agoraphobia", "text": "Do you require a companion when going out due to these fears?"},
    {"id": "mh.adhd.1", "domain": "mental_health", "topic": "Attention-Deficit/Hyperactivity Disorder", "text": "Do you find it difficult to organize tasks and activities?"},
    {"id": "mh.adhd.2", "domain": "mental_health", "topic": "Attention-Deficit/Hyperactivity Disorder", "text": "Do you often forget appointments or daily activities?"},
    {"id": "mh.adhd.3", "domain": "mental_health", "topic": "Attention-Deficit/Hyperactivity Disorder", "text": "Do you often make careless mistakes in work or other activities?"},
    {"id": "mh.adhd.4", "domain": "mental_health", "topic": "Attention-Deficit/Hyperactivity Disorder", "text": "Do you get easily sidetracked by extraneous stimuli?"},
    {"id": "mh.adhd.5", "domain": "mental_health", "topic": "Attention-Deficit/Hyperactivity Disorder", "text": "How much do these symptoms impact your performance in work or school?"},
    {"id": "mh.body_image.1", "domain": "mental_health", "topic": "Body Image", "text": "How would you describe your level of satisfaction with your appearance?"},
    {"id": "mh.body_image.2", "domain": "mental_health", "topic": "Body Image", "text": "Do you often compare your body to others?"},
    {"id": "mh.body_image.3", "domain": "mental_health", "topic": "Body Image", "text": "How much does your perception of your body affect your daily life?"},
    {"id": "mh.body_image.4", "domain": "mental_health", "topic": "Body Image", "text": "Do you have any concerns about your eating habits or weight management?"},
    {"id": "mh.body_image.5", "domain": "mental_health", "topic": "Body Image", "text": "How confident do you feel in your abilities and decisions?"},
    {"id": "mh.bpd.1", "domain": "mental_health", "topic": "Borderline Personality Disorder", "text": "Do you experience intense and unstable relationships with others?"},
    {"id": "mh.bpd.2", "domain": "mental_health", "topic": "Borderline Personality Disorder", "text": "Do you often feel empty or bored?"},
    {"id": "mh.bpd.3", "domain": "mental_health", "topic": "Borderline Personality Disorder", "text": "Do you experience mood swings that can last for a few hours to a few days?"},
    {"id": "mh.bpd.4", "domain": "mental_health", "topic": "Borderline Personality Disorder", "text": "Do you have a fear of abandonment, either real or imagined?"},
    {"id": "mh.bpd.5", "domain": "mental_health", "topic": "Borderline Personality Disorder", "text": "Do you engage in impulsive behaviors, like substance abuse or reckless driving?"},
    {"id": "mh.delusions.1", "domain": "mental_health", "topic": "Delusions", "text": "Do you feel disconnected from reality at times?"},
    {"id": "mh.delusions.2", "domain": "mental_health", "topic": "Delusions", "text": "Do you have strong beliefs that others find unusual or unrealistic?"},
    {"id": "mh.delusions.3", "domain": "mental_health", "topic": "Delusions", "text": "Do you feel controlled or influenced by external forces or beings?"},
    {"id": "mh.delusions.4", "domain": "mental_health", "topic": "Delusions", "text": "Have you experienced changes in your perception or senses that others do not?"},
    {"id": "mh.delusions.5", "domain": "mental_health", "topic": "Delusions", "text": "Do these experiences cause you distress or impair your functioning?"},
    {"id": "mh.gad.1", "domain": "mental_health", "topic": "Generalized Anxiety Disorder", "text": "Do you find it hard to control your worrying?"},
    {"id": "mh.gad.2", "domain": "mental_health", "topic": "Generalized Anxiety Disorder", "text": "Does your anxiety interfere with your work, school, or family responsibilities?"},
    {"id": "mh.gad.3", "domain": "mental_health", "topic": "Generalized Anxiety Disorder", "text": "Do you experience physical symptoms of anxiety, like muscle tension or restlessness?"},
    {"id": "mh.gad.4", "domain": "mental_health", "topic": "Generalized Anxiety Disorder", "text": "Do you often feel irritable or on edge?"},
    {"id": "mh.gad.5", "domain": "mental_health", "topic": "Generalized Anxiety Disorder", "text": "Do you have trouble sleeping due to worry?"},
    {"id": "mh.mania.1", "domain": "mental_health", "topic": "Hypomania/Mania", "text": "Have you found yourself more talkative or speaking faster than usual?"},
    {"id": "mh.mania.2", "domain": "mental_health", "topic": "Hypomania/Mania", "text": "Do you often feel overly confident in your abilities or ideas?"},
    {"id": "mh.mania.3", "domain": "mental_health", "topic": "Hypomania/Mania", "text": "Have you engaged in risky behaviors, like excessive spending or reckless driving?"},
    {"id": "mh.mania.4", "domain": "mental_health", "topic": "Hypomania/Mania", "text": "Do you find your thoughts racing or jumping from topic to topic?"},
    {"id": "mh.mania.5", "domain": "mental_health", "topic": "Hypomania/Mania", "text": "Have others noticed a significant change in your mood or behavior?"},
    {"id": "mh.mdd.1", "domain": "mental_health", "topic": "Major Depressive Disorder", "text": "Do you often feel hopeless or helpless?"},
    {"id": "mh.mdd.2", "domain": "mental_health", "topic": "Major Depressive Disorder", "text": "Have you noticed a change in your appetite or weight without trying to lose or gain weight?"},
    {"id": "mh.mdd.3", "domain": "mental_health", "topic": "Major Depressive Disorder", "text": "Do you struggle to concentrate on tasks or make decisions?"},
    {"id": "mh.mdd.4", "domain": "mental_health", "topic": "Major Depressive Disorder", "text": "Do you often feel worthless or excessively guilty about things?"},
    {"id": "mh.mdd.5", "domain": "mental_health", "topic": "Major Depressive Disorder", "text": "Have your sleep patterns changed, such as sleeping too much or too little?"},
    {"id": "mh.ocd.1", "domain": "mental_health", "topic": "Obsessive-Compulsive Disorder", "text": "Do you check things repeatedly or have rituals that you feel compelled to perform?"},
    {"id": "mh.ocd.2", "domain": "mental_health", "topic": "Obsessive-Compulsive Disorder", "text": "Do your thoughts or rituals cause you distress or interfere with your daily life?"},
    {"id": "mh.ocd.3", "domain": "mental_health", "topic": "Obsessive-Compulsive Disorder", "text": "Do you spend more than an hour a day on these thoughts or rituals?"},
    {"id": "mh.ocd.4", "domain": "mental_health", "topic": "Obsessive-Compulsive Disorder", "text": "Do you avoid certain situations or activities because of your fears or compulsions?"},
    {"id": "mh.ocd.5", "domain": "mental_health", "topic": "Obsessive-Compulsive Disorder", "text": "Do you need to have things arranged in a specific order or manner?"},
    {"id": "mh.panic.1", "domain": "mental_health", "topic": "Panic Attacks", "text": "During panic attacks, do you feel like you're losing control or going crazy?"},
    {"id": "mh.panic.2", "domain": "mental_health", "topic": "Panic Attacks", "text": "Do you fear these attacks to the point of altering your daily routines?"},
    {"id": "mh.panic.3", "domain": "mental_health", "topic": "Panic Attacks", "text": "Have you visited the emergency room or sought medical help for these symptoms?"},
    {"id": "mh.panic.4", "domain": "mental_health", "topic": "Panic Attacks", "text": "Do you avoid places or situations for fear of triggering an attack?"},
    {"id": "mh.panic.5", "domain": "mental_health", "topic": "Panic Attacks", "text": "How do these attacks impact your daily life?"},
    {"id": "mh.pdd.1", "domain": "mental_health", "topic": "Persistent Depressive Disorder", "text": "Have you experienced low mood more days than not for at least two years?"},
    {"id": "mh.pdd.2", "domain": "mental_health", "topic": "Persistent Depressive Disorder", "text": "Do you feel like you've been in a mild but constant state of depression?"},
    {"id": "mh.pdd.3", "domain": "mental_health", "topic": "Persistent Depressive Disorder", "text": "Do you find little pleasure in activities you once enjoyed?"},
    {"id": "mh.pdd.4", "domain": "mental_health", "topic": "Persistent Depressive Disorder", "text": "Do you struggle with feelings of inadequacy or low self-esteem?"},
    {"id": "mh.pdd.5", "domain": "mental_health", "topic": "Persistent Depressive Disorder", "text": "Have you experienced changes in your appetite or sleep patterns?"},
    {"id": "mh.ptsd.1", "domain": "mental_health", "topic": "Post-Traumatic Stress Disorder", "text": "Do you experience heightened vigilance or jumpiness?"},
    {"id": "mh.ptsd.2", "domain": "mental_health", "topic": "Post-Traumatic Stress Disorder", "text": "Are you engaging in self-destructive or risky behavior since the event?"},
    {"id": "mh.ptsd.3", "domain": "mental_health", "topic": "Post-Traumatic Stress Disorder", "text": "Do you feel numb or detached from people, activities, or surroundings?"},
    {"id": "mh.ptsd.4", "domain": "mental_health", "topic": "Post-Traumatic Stress Disorder", "text": "Do you find yourself being easily angered or having aggressive outbursts?"},
    {"id": "mh.ptsd.5", "domain": "mental_health", "topic": "Post-Traumatic Stress Disorder", "text": "Have you noticed any changes in your beliefs or feelings about yourself and others?"},
    {"id": "mh.social_phobia.1", "domain": "mental_health", "topic": "Social Phobia", "text": "Do you fear being criticized or embarrassed in social situations?"},
    {"id": "mh.social_phobia.2", "domain": "mental_health", "topic": "Social Phobia", "text": "Does speaking to unfamiliar people cause you significant anxiety?"},
    {"id": "mh.social_phobia.3", "domain": "mental_health", "topic": "Social Phobia", "text": "Do you avoid social situations due to fear of being judged?"},
    {"id": "mh.social_phobia.4", "domain": "mental_health", "topic": "Social Phobia", "text": "Do physical symptoms like sweating or trembling accompany your fear in social settings?"},
    {"id": "mh.social_phobia.5", "domain": "mental_health", "topic": "Social Phobia", "text": "How does this fear impact your personal or professional life?"},
    {"id": "mh.substance.1", "domain": "mental_health", "topic": "Substance Abuse", "text": "Do you use any substances like drugs or alcohol regularly?"},
    {"id": "mh.substance.2", "domain": "mental_health", "topic": "Substance Abuse", "text": "How often do you find yourself using these substances?"},
    {"id": "mh.substance.3", "domain": "mental_health", "topic": "Substance Abuse", "text": "Have you noticed any negative impacts on your health, work, or relationships due to substance use?"},
    {"id": "mh.substance.4", "domain": "mental_health", "topic": "Substance Abuse", "text": "Do you feel a strong desire or compulsion to use these substances?"},
    {"id": "mh.substance.5", "domain": "mental_health", "topic": "Substance Abuse", "text": "Have you tried to cut down or stop using these substances in the past?"},
    {"id": "pers.agreeableness.1", "domain": "personality", "topic": "Agreeableness", "text": "Do you often find yourself making compromises to maintain harmony in your relationships?"},
    {"id": "pers.agreeableness.2", "domain": "personality", "topic": "Agreeableness", "text": "Would you describe yourself as someone who is generally trusting of others?"},
    {"id": "pers.agreeableness.3", "domain": "personality", "topic": "Agreeableness", "text": "How often do you get into arguments with people?"},
    {"id": "pers.agreeableness.4", "domain": "personality", "topic": "Agreeableness", "text": "Do you tend to empathize easily with others?"},
    {"id": "pers.agreeableness.5", "domain": "personality", "topic": "Agreeableness", "text": "Do you find it easy to forgive others when they upset you?"},
    {"id": "pers.conscientiousness.1", "domain": "personality", "topic": "Conscientiousness", "text": "How often do you set and achieve long-term goals?"},
    {"id": "pers.conscientiousness.2", "domain": "personality", "topic": "Conscientiousness", "text": "Do you prefer having a set schedule or being spontaneous?"},
    {"id": "pers.conscientiousness.3", "domain": "personality", "topic": "Conscientiousness", "text": "How would you rate your ability to resist temptations or distractions?"},
    {"id": "pers.conscientiousness.4", "domain": "personality", "topic": "Conscientiousness", "text": "Do you take pride in the accuracy and detail of your work?"},
    {"id": "pers.conscientiousness.5", "domain": "personality", "topic": "Conscientiousness", "text": "How do you handle important deadlines?"},
    {"id": "pers.extraversion.1", "domain": "personality", "topic": "Extraversion", "text": "Do you enjoy being the center of attention in social gatherings?"},
    {"id": "pers.extraversion.2", "domain": "personality", "topic": "Extraversion", "text": "How often do you initiate conversations with people you don’t know?"},
    {"id": "pers.extraversion.3", "domain": "personality", "topic": "Extraversion", "text": "Do you prefer group activities or solitary activities?"},
    {"id": "pers.extraversion.4", "domain": "personality", "topic": "Extraversion", "text": "Do you feel energized when interacting with a large group of people?"},
    {"id": "pers.extraversion.5", "domain": "personality", "topic": "Extraversion", "text": "How would you describe your level of assertiveness in social situations?"},
    {"id": "pers.neuroticism.1", "domain": "personality", "topic": "Neuroticism", "text": "Do you often feel anxious or worried about various aspects of your life?"},
    {"id": "pers.neuroticism.2", "domain": "personality", "topic": "Neuroticism", "text": "How do you react to stressful situations?"},
    {"id": "pers.neuroticism.3", "domain": "personality", "topic": "Neuroticism", "text": "Do you frequently feel mood swings or emotional instability?"},
    {"id": "pers.neuroticism.4", "domain": "personality", "topic": "Neuroticism", "text": "Do you often have trouble sleeping due to worrying?"},
    {"id": "pers.neuroticism.5", "domain": "personality", "topic": "Neuroticism", "text": "How often do you experience feelings of sadness or depression?"},
    {"id": "pers.openness.1", "domain": "personality", "topic": "Openness", "text": "Do you enjoy trying new activities and visiting new places?"},
    {"id": "pers.openness.2", "domain": "personality", "topic": "Openness", "text": "How often do you engage in creative activities like writing, painting, or playing music?"},
    {"id": "pers.openness.3", "domain": "personality", "topic": "Openness", "text": "Do you enjoy discussing abstract concepts and ideas?"},
    {"id": "pers.openness.4", "domain": "personality", "topic": "Openness", "text": "How do you feel about change and variety in your life?"},
    {"id": "pers.openness.5", "domain": "personality", "topic": "Openness", "text": "Would you say you are open to new and diverse perspectives or opinions?"},
    {"id": "ther.family.1", "domain": "therapeutic", "topic": "Family History", "text": "Do you feel you have a strong and positive relationship with your family members?"},
    {"id": "ther.family.2", "domain": "therapeutic", "topic": "Family History", "text": "Do you manage conflicts or disagreements within your family effectively?"},
    {"id": "ther.family.3", "domain": "therapeutic", "topic": "Family History", "text": "Is there a history of mental health issues or substance use in your family?"},
    {"id": "ther.family.4", "domain": "therapeutic", "topic": "Family History", "text": "Do you believe your family background has significantly influenced your current life choices and behaviors?"},
    {"id": "ther.family.5", "domain": "therapeutic", "topic": "Family History", "text": "Do you feel supported and understood by your family?"},
    {"id": "ther.trauma.1", "domain": "therapeutic", "topic": "Trauma History", "text": "Have you ever experienced a traumatic event such as physical, emotional, or sexual abuse?"},
    {"id": "ther.trauma.2", "domain": "therapeutic", "topic": "Trauma History", "text": "How do you feel this event has affected your life?"},
    {"id": "ther.trauma.3", "domain": "therapeutic", "topic": "Trauma History", "text": "Do you often think about or have flashbacks to this traumatic event?"},
    {"id": "ther.trauma.4", "domain": "therapeutic", "topic": "Trauma History", "text": "How do you typically cope with reminders of the trauma?"},
    {"id": "ther.trauma.5", "domain": "therapeutic", "topic": "Trauma History", "text": "Have you sought any professional help to deal with the aftermath of this traumatic experience?"},
    {"id": "ther.resilience.1", "domain": "therapeutic", "topic": "Resilience", "text": "How quickly do you recover from setbacks or disappointments?"},
    {"id": "ther.resilience.2", "domain": "therapeutic", "topic": "Resilience", "text": "Do you often find positive aspects in negative situations?"},
    {"id": "ther.resilience.3", "domain": "therapeutic", "topic": "Resilience", "text": "How do you usually cope with stress and pressure?"},
    {"id": "ther.resilience.4", "domain": "therapeutic", "topic": "Resilience", "text": "Do you feel confident in your ability to handle new challenges?"},
    {"id": "ther.resilience.5", "domain": "therapeutic", "topic": "Resilience", "text": "How often do you bounce back from hardships stronger than before?"},
    {"id": "direct.phq8.1", "domain": "direct", "topic": "PHQ-8", "text": "How much are you experiencing little interest or pleasure in doing things?"},
    {"id": "direct.phq8.2", "domain": "direct", "topic": "PHQ-8", "text": "How likely are you to volunteer your time to help others?", "excluded_by_default": true},
    {"id": "direct.phq8.3", "domain": "direct", "topic": "PHQ-8", "text": "How much are you feeling down, depressed, or hopeless?"},
    {"id": "direct.phq8.4", "domain": "direct", "topic": "PHQ-8", "text": "How much are you having trouble with falling or staying asleep, or sleeping too much?"},
    {"id": "direct.phq8.5", "domain": "direct", "topic": "PHQ-8", "text": "How much are you feeling tired or having little energy?"},
    {"id": "direct.phq8.6", "domain": "direct", "topic": "PHQ-8", "text": "How much are you experiencing poor appetite or overeating?"},
    {"id": "direct.phq8.7", "domain": "direct", "topic": "PHQ-8", "text": "How much are you feeling bad about yourself, or that you are a failure or have let yourself or your family down?"},
    {"id": "direct.phq8.8", "domain": "direct", "topic": "PHQ-8", "text": "How much are you having trouble concentrating on things, like reading the newspaper or watching television?"},
    {"id": "direct.phq8.9", "domain": "direct", "topic": "PHQ-8", "text": "How much are you moving or speaking so slowly that other people might have noticed, or the opposite – being so fidgety or restless that you've been moving around a lot more than usual?"},
    {"id": "direct.pclc.1", "domain": "direct", "topic": "PCL-C", "text": "How much are you re-experiencing disturbing memories, thoughts, or images of a stressful experience from the past?"},
    {"id": "direct.pclc.2", "domain": "direct", "topic": "PCL-C", "text": "How much are you experiencing repeated, disturbing dreams of a stressful experience from the past?"},
    {"id": "direct.pclc.3", "domain": "direct", "topic": "PCL-C", "text": "How much are you suddenly acting or feeling as if a stressful experience were happening again (as if you were reliving it)?"},
    {"id": "direct.pclc.4", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling upset when something reminded you of a stressful experience from the past?"},
    {"id": "direct.pclc.5", "domain": "direct", "topic": "PCL-C", "text": "How much are you having physical reactions (e.g., heart pounding, trouble breathing, sweating) when something reminded you of a stressful experience?"},
    {"id": "direct.pclc.6", "domain": "direct", "topic": "PCL-C", "text": "How much are you avoiding thinking about or talking about a stressful experience from the past or avoiding having feelings related to it?"},
    {"id": "direct.pclc.7", "domain": "direct", "topic": "PCL-C", "text": "How much are you avoiding activities or situations because they remind you of a stressful experience?"},
    {"id": "direct.pclc.8", "domain": "direct", "topic": "PCL-C", "text": "How much are you having trouble remembering important parts of a stressful experience?"},
    {"id": "direct.pclc.9", "domain": "direct", "topic": "PCL-C", "text": "How much are you losing interest in activities that you used to enjoy?"},
    {"id": "direct.pclc.10", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling detached or estranged from others?"},
    {"id": "direct.pclc.11", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling emotionally numb or being unable to have loving feelings for those close to you?"},
    {"id": "direct.pclc.12", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling as if your future will somehow be cut short?"},
    {"id": "direct.pclc.13", "domain": "direct", "topic": "PCL-C", "text": "How much are you having trouble falling or staying asleep?"},
    {"id": "direct.pclc.14", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling irritable or having angry outbursts?"},
    {"id": "direct.pclc.15", "domain": "direct", "topic": "PCL-C", "text": "How much are you having difficulty concentrating?"},
    {"id": "direct.pclc.16", "domain": "direct", "topic": "PCL-C", "text": "How much are you being 'super alert' or watchful or on guard?"},
    {"id": "direct.pclc.17", "domain": "direct", "topic": "PCL-C", "text": "How much are you feeling jumpy or easily startled?"}
  ]
})json";

inline QuestionnaireBank QuestionnaireBank::load_default(bool include_excluded) {
    return parse(kDefaultBankJson, "builtin-default", include_excluded);
}

} // namespace lmiq
