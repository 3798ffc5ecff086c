#pragma once

#include <string>
#include <vector>

#include "number_plan.hpp"
#include "source_ir.hpp"

namespace npgen {

struct SurfaceNP {
  std::string text;
  int np_id = 0;
};

// Regular English pluralization with an optional irregular override:
// -s; -es after s/x/z/ch/sh; consonant+y -> -ies.
std::string pluralize(const std::string& lemma,
                      const std::optional<std::string>& irregular = std::nullopt);

// Built-in a/an exceptions used when the lexicon ships none. Entries are
// prefixes whose article is the opposite of the vowel-letter heuristic.
const std::vector<std::string>& default_an_exceptions();

std::string article_surface(Article article, const std::string& following_word,
                            const std::vector<std::string>& an_exceptions);
std::string article_surface(Article article, const std::string& following_word);

// Cardinal in word form ("two"); values above the word table fall back to digits.
std::string cardinal_words(int n);

SurfaceNP render_np(const RealizationPlan& plan, const Lexicon& lexicon);

struct RenderedRegion {
  int np_id = 0;
  std::size_t start = 0;
  std::size_t length = 0;
  std::string text;  // substring of the final sentence
};

struct RenderedSentence {
  std::string text;
  std::vector<RenderedRegion> regions;
};

// Substitutes rendered NPs into the sentence template, fills agreement slots,
// joins list groups, and uppercases a lowercase sentence-initial letter.
RenderedSentence render_sentence(const SentenceIR& sentence,
                                 const std::vector<RealizationPlan>& plans,
                                 const Lexicon& lexicon, const PlanOptions& options = {});

}  // namespace npgen
