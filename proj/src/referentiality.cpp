#include "referentiality.hpp"

namespace npgen {
namespace {

const VerbEntry* main_verb(const SentenceIR& sentence, const Lexicon& lexicon) {
  if (!sentence.main_verb_ja) return nullptr;
  return &lexicon.verb(*sentence.main_verb_ja);
}

// Test 1 also honors restrictive determiners (possessives) from the lexicon.
bool restrictively_modified(const NPNode& np, const Lexicon& lexicon) {
  if (np.restrictively_modified) return true;
  if (np.determiner_ja && lexicon.modifier(*np.determiner_ja).is_restrictive) return true;
  return false;
}

bool is_purpose_target(const NPNode& np, const SentenceIR& sentence, const Lexicon& lexicon) {
  for (const NPNode& other : sentence.nps) {
    if (other.id != np.id && other.purpose_target_of && *other.purpose_target_of == np.id) {
      return true;
    }
  }
  if (np.determiner_ja && lexicon.modifier(*np.determiner_ja).forces_generic_on_complement) {
    return true;
  }
  return false;
}

bool copula_subject_subsumed(const NPNode& np, const SentenceIR& sentence, const Lexicon& lexicon) {
  const VerbEntry* verb = main_verb(sentence, lexicon);
  if (!verb || !verb->is_copula) return false;
  if (np.syntactic_role != SyntacticRole::Subject) return false;
  const NPNode* complement = nullptr;
  for (const NPNode& other : sentence.nps) {
    if (other.syntactic_role == SyntacticRole::CopulaComplement) {
      complement = &other;
      break;
    }
  }
  if (!complement) return false;
  const NounEntry& subject_noun = lexicon.noun(np.head_ja);
  const NounEntry& complement_noun = lexicon.noun(complement->head_ja);
  return lexicon.hierarchy().is_subsumed(subject_noun.semantic_category,
                                         complement_noun.semantic_category);
}

}  // namespace

Referentiality classify_np(const NPNode& np, const SentenceIR& sentence, const Lexicon& lexicon) {
  const VerbEntry* verb = main_verb(sentence, lexicon);

  if (restrictively_modified(np, lexicon)) {
    return {ReferentialityKind::Referential, 1};
  }
  if (np.syntactic_role == SyntacticRole::Subject && verb && verb->generic_subject) {
    return {ReferentialityKind::Generic, 2};
  }
  if (copula_subject_subsumed(np, sentence, lexicon)) {
    return {ReferentialityKind::Generic, 3};
  }
  if (is_purpose_target(np, sentence, lexicon)) {
    return {ReferentialityKind::Generic, 4};
  }
  if (np.syntactic_role == SyntacticRole::Object && verb && verb->generic_object) {
    return {ReferentialityKind::Generic, 5};
  }
  if (np.syntactic_role == SyntacticRole::CopulaComplement) {
    return {ReferentialityKind::Ascriptive, 6};
  }
  if (np.syntactic_role == SyntacticRole::AppositiveTo) {
    return {ReferentialityKind::Ascriptive, 7};
  }
  return {ReferentialityKind::Referential, 8};
}

const char* referentiality_test_name(int test) {
  switch (test) {
    case 1: return "restrictive modification";
    case 2: return "subject of a generic-subject verb";
    case 3: return "copula subject subsumed by complement category";
    case 4: return "purpose target";
    case 5: return "object of a generic-object verb";
    case 6: return "copula complement";
    case 7: return "appositive";
    case 8: return "default";
  }
  return "?";
}

}  // namespace npgen
