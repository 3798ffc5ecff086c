#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexicon.hpp"
#include "referentiality.hpp"
#include "source_ir.hpp"
#include "types.hpp"

namespace npgen {

// The countability environment an NP is realized in. `count` and `number` are
// meaningful for denumerated environments; count=1 forces singular, >=2 plural.
struct Environment {
  EnvironmentKind kind = EnvironmentKind::MassUncountable;
  std::optional<int> count;
  std::optional<Number> number;
  int fired_step = 7;  // 1..7
};

// Step 1..6 produce a resolved environment; step 7 hands back a marker and the
// caller applies dictionary defaults.
struct EnvironmentResult {
  std::optional<Environment> environment;  // empty <=> defaults (step 7)
  int fired_step = 7;
};

struct ClassifierComplement {
  std::string surface;  // rendered as-is, never inflected and never articled
  Number number = Number::Singular;
};

// A fully resolved NP ready for surface realization.
struct RealizationPlan {
  int np_id = 0;
  std::string surface_head;  // noun, classifier, or denumeration substitute
  std::optional<std::string> head_irregular_plural;
  Number head_number = Number::Singular;
  Article article = Article::None;
  std::optional<std::string> denumerator_token;
  std::optional<ClassifierComplement> classifier_complement;
  std::optional<std::string> postmodifier;  // "all over the country" type
  Referentiality referentiality;
  std::optional<Environment> environment;  // absent for generic plans
  bool collective_head = false;            // singular collective may take plural agreement
  std::vector<std::string> trace;
};

struct PlanOptions {
  bool some_insertion = false;             // "some" for indefinite plural/mass objects
  bool collective_plural_agreement = false;
};

// Ordered steps deciding countability and number for referential and
// ascriptive NPs:
//   1 explicitly plural source        -> denumerated plural
//   2 determiner with a forced environment or number
//   3 numeral + classifier            -> denumerated with that count
//   4 complement modifier with a forced number
//   5 ascriptive NPs match their subject (or appositive anchor)
//   6 object of a mass-countable verb -> mass countable
//   7 dictionary defaults (marker; see apply_defaults)
// `kind` is the NP's already-determined referentiality (never generic here);
// `anchor_plan` is required for ascriptive NPs: the resolved subject plan, or
// the anchor NP's plan for appositives.
EnvironmentResult determine_environment(const NPNode& np, const SentenceIR& sentence,
                                        const Lexicon& lexicon, ReferentialityKind kind,
                                        const RealizationPlan* anchor_plan);

// Step-7 defaults: uncountable and weakly countable nouns become mass
// uncountable singular; pluralia tanta denumerated plural; fully and strongly
// countable denumerated with the dictionary default number.
Environment apply_defaults(const NounEntry& entry);

RealizationPlan plan_np(const NPNode& np, const Referentiality& referentiality,
                        const std::optional<Environment>& environment, const Lexicon& lexicon,
                        const PlanOptions& options = {});

// Classifies, determines environments, and plans every NP of the sentence,
// resolving subjects before the ascriptive NPs that depend on them.
std::vector<RealizationPlan> resolve_sentence(const SentenceIR& sentence, const Lexicon& lexicon,
                                              const PlanOptions& options = {});

const char* environment_step_name(int step);

}  // namespace npgen
