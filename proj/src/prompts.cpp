#include "aphgen/llm.hpp"

namespace aphgen {

namespace {

// Anchor facts every prompt asks the model to work from. Editable in custom
// packs; these mirror the protected-word anchors of the procedural pathway.
constexpr const char* kSceneAnchors =
    "The picture shows a cat stuck up a tree, a little girl who called her "
    "father, a ladder that fell, and firefighters approaching to rescue the cat.";

std::string user_text(const char* style) {
  std::string t = "Describe this picture in your own spoken words. ";
  t += kSceneAnchors;
  t += " ";
  t += style;
  t += " Output only the spoken description, no commentary.";
  return t;
}

PromptPack make_default_pack() {
  const char* kSystem[4] = {
      "You are simulating the spoken picture description of a person with mild "
      "aphasia. Respond only with the transcript of what they say.",
      "You are simulating the spoken picture description of a person with "
      "moderate aphasia. Respond only with the transcript of what they say.",
      "You are simulating the spoken picture description of a person with "
      "severe aphasia. Respond only with the transcript of what they say.",
      "You are simulating the spoken picture description of a person with very "
      "severe aphasia. Respond only with the transcript of what they say.",
  };
  // Four style variants per severity for output diversity.
  const char* kStyles[4][4] = {
      {
          "Speak naturally and concisely. Include most key details. Occasional "
          "brief hesitations or minor word-finding issues are acceptable. Avoid "
          "technical terms.",
          "Speak in complete sentences with only slight hesitations. Cover the "
          "main events in order.",
          "Describe the scene fluently but allow one or two brief pauses or "
          "restarts while finding a word.",
          "Give a clear, short description; a single minor word substitution is "
          "acceptable.",
      },
      {
          "Use some circumlocutions, a few phonemic/semantic errors, and several "
          "hesitations (um/uh/...). Keep sentences short. Mention several key "
          "details but omit a couple.",
          "Short sentences with frequent um/uh hesitations. Talk around words "
          "you cannot find. Leave out one or two details.",
          "Mix correct sentences with hesitant fragments. Include a couple of "
          "wrong but related words.",
          "Keep it brief and effortful; several pauses, some word-finding "
          "detours, a few details missing.",
      },
      {
          "Telegraphic style. Short phrases. Missing function words. Frequent "
          "hesitations. Include some errors, 1-2 nonwords, and at least one "
          "self-repair [like this].",
          "Two to four word phrases only. Drop most small words. Hesitate often. "
          "Include a sound-based word error.",
          "Fragmented phrases, many um/uh, missing verbs and articles, one or "
          "two made-up words.",
          "Halting telegraphic output; content words only; at least one restart "
          "and one wrong word.",
      },
      {
          "One-two-word bursts, long pauses, frequent failed starts. 1-2 "
          "neologisms allowed. May mislabel items.",
          "Single words and broken starts separated by pauses (...). Very few "
          "words in total. Naming errors allowed.",
          "Mostly isolated nouns with long pauses; frequent abandoned attempts; "
          "may call things by the wrong name.",
          "A handful of effortful words, heavy pausing, one or two invented "
          "words, little grammatical structure.",
      },
  };
  PromptPack pack;
  for (std::size_t s = 0; s < kAllSeverities.size(); ++s)
    for (int t = 0; t < 4; ++t)
      pack.templates.push_back(
          {kAllSeverities[s], t + 1, kSystem[s], user_text(kStyles[s][t])});
  return pack;
}

}  // namespace

PromptPack default_prompt_pack() {
  static const PromptPack pack = make_default_pack();
  return pack;
}

}  // namespace aphgen
