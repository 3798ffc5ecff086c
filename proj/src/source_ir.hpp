#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexicon.hpp"
#include "types.hpp"

namespace npgen {

// One analyzed source noun phrase: the features the transfer rules consume.
struct NPNode {
  int id = 0;  // sentence-unique
  std::string head_ja;
  bool explicit_plural = false;  // -tachi marker
  std::optional<std::string> determiner_ja;
  std::optional<int> cardinal;  // numeral+classifier constructions; positive
  CardinalStyle cardinal_style = CardinalStyle::Digits;
  std::optional<std::string> classifier_ja;
  bool restrictively_modified = false;
  SyntacticRole syntactic_role = SyntacticRole::Other;
  std::optional<int> appositive_to;       // set iff syntactic_role == AppositiveTo
  std::optional<int> purpose_target_of;   // this NP is aimed at the referenced NP
  std::optional<std::string> complement_modifier_ja;  // "all over the country" type
  bool definite = false;  // pass-through flag; no rule here ever sets it

  bool operator==(const NPNode&) const = default;
};

struct SentenceIR {
  std::string id;  // document-unique
  std::vector<NPNode> nps;
  std::optional<std::string> main_verb_ja;
  // Target-language template; placeholders {np:ID}, {be:ID}, {list:ID,ID,...}.
  std::string template_text;
  std::optional<std::string> gold;  // reference translation, NP regions as [[id:text]]

  const NPNode* find_np(int id) const;

  bool operator==(const SentenceIR&) const = default;
};

struct Diagnostic {
  std::string kind;      // unknown_noun, unknown_verb, unknown_modifier, unknown_classifier,
                         // missing_subject, appositive_cycle, bad_appositive_anchor
  std::string detail;
  std::optional<int> np_id;
};

// One structured record per line; '#' comments and blank lines are skipped.
std::vector<SentenceIR> parse_document(const std::string& text);
std::vector<SentenceIR> parse_document_file(const std::string& path);

std::string serialize_sentence(const SentenceIR& sentence);
std::string serialize_document(const std::vector<SentenceIR>& sentences);

// One diagnostic per unknown lemma plus structural problems that would make
// plan resolution impossible. Empty list means the sentence is translatable.
std::vector<Diagnostic> validate_against_lexicon(const SentenceIR& sentence, const Lexicon& lexicon);

// Gold NP regions: "[[id:text]]" spans inside a reference translation.
struct GoldRegion {
  int np_id = 0;
  std::string text;
};

struct GoldSentence {
  std::string plain;  // gold with region delimiters stripped
  std::vector<GoldRegion> regions;
};

GoldSentence parse_gold_regions(const std::string& gold);

}  // namespace npgen
