#pragma once

#include <string>
#include <vector>

#include "lexicon.hpp"
#include "number_plan.hpp"
#include "realizer.hpp"
#include "source_ir.hpp"

namespace npgen {

struct TranslatedSentence {
  std::string id;
  bool translated = false;
  RenderedSentence rendered;             // valid when translated
  std::vector<RealizationPlan> plans;    // valid when translated
  std::vector<Diagnostic> diagnostics;   // non-empty when not translated
};

// Runs the full per-sentence pipeline over a parsed corpus. Sentences with
// diagnostics are reported, not translated; order follows the input.
std::vector<TranslatedSentence> translate_corpus(const std::vector<SentenceIR>& sentences,
                                                 const Lexicon& lexicon,
                                                 const PlanOptions& options = {});

// The translate output stream: one JSON record per sentence (translation plus
// per-NP plan summaries, or diagnostics) and a trailing '#' footer line.
std::string format_translation_output(const std::vector<TranslatedSentence>& results);

// Human-readable rule-firing listing for one NP of one sentence.
std::string trace_np(const std::vector<SentenceIR>& sentences, const Lexicon& lexicon,
                     const std::string& sentence_id, int np_id, const PlanOptions& options = {});

}  // namespace npgen
