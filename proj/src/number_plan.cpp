#include "number_plan.hpp"

#include <unordered_map>

#include "errors.hpp"
#include "realizer.hpp"

namespace npgen {
namespace {

// Category that suppresses generated articles (demonstratives and personal
// pronouns carry their own determination).
constexpr const char* kPronounCategory = "PRONOUN";

bool pronoun_head(const NounEntry& entry, const Lexicon& lexicon) {
  const SemanticHierarchy& h = lexicon.hierarchy();
  return h.contains(kPronounCategory) &&
         h.is_subsumed(entry.semantic_category, kPronounCategory);
}

bool ascriptive_shape(const NPNode& np) {
  return np.syntactic_role == SyntacticRole::CopulaComplement ||
         np.syntactic_role == SyntacticRole::AppositiveTo;
}

Number number_for_count(int count) {
  return count == 1 ? Number::Singular : Number::Plural;
}

Environment copy_from_anchor(const NPNode& anchor_np, const RealizationPlan& anchor,
                             const Lexicon& lexicon) {
  Environment env;
  env.fired_step = 5;
  if (anchor.environment) {
    env.kind = anchor.environment->kind;
  } else {
    // Generic anchor: countable heads put the complement in a denumerated
    // environment; all others stay mass uncountable.
    const NounEntry& entry = lexicon.noun(anchor_np.head_ja);
    bool countable = entry.ncp.major == MajorNcp::FullyCountable ||
                     entry.ncp.major == MajorNcp::StronglyCountable ||
                     entry.ncp.major == MajorNcp::PluraliaTantum;
    env.kind = countable ? EnvironmentKind::Denumerated : EnvironmentKind::MassUncountable;
  }
  if (env.kind == EnvironmentKind::Denumerated) env.number = anchor.head_number;
  return env;
}

std::string trace_env(const Environment& env) {
  std::string t = "env.step" + std::to_string(env.fired_step) + ":" + to_string(env.kind);
  if (env.count) t += ",count=" + std::to_string(*env.count);
  if (env.number) t += std::string(",number=") + to_string(*env.number);
  return t;
}

const char* cell_column(const Environment& env) {
  switch (env.kind) {
    case EnvironmentKind::Denumerated:
      return env.number == Number::Plural ? "denum_plural" : "denum_singular";
    case EnvironmentKind::MassCountable: return "mass_countable";
    case EnvironmentKind::MassUncountable: return "mass_uncountable";
  }
  return "?";
}

}  // namespace

EnvironmentResult determine_environment(const NPNode& np, const SentenceIR& sentence,
                                        const Lexicon& lexicon, ReferentialityKind kind,
                                        const RealizationPlan* anchor_plan) {
  // Step 1: explicitly plural source (-tachi).
  if (np.explicit_plural) {
    Environment env{EnvironmentKind::Denumerated, std::nullopt, Number::Plural, 1};
    return {env, 1};
  }
  // Step 2: translated determiner that forces an environment or number.
  if (np.determiner_ja) {
    const ModifierEntry& mod = lexicon.modifier(*np.determiner_ja);
    if (mod.forced_environment || mod.forced_number) {
      Environment env;
      env.fired_step = 2;
      env.kind = mod.forced_environment.value_or(EnvironmentKind::Denumerated);
      if (env.kind == EnvironmentKind::Denumerated) env.number = mod.forced_number;
      return {env, 2};
    }
  }
  // Step 3: numeral + classifier.
  if (np.cardinal) {
    Environment env{EnvironmentKind::Denumerated, *np.cardinal, number_for_count(*np.cardinal), 3};
    return {env, 3};
  }
  // Step 4: complement modifier that forces a number.
  if (np.complement_modifier_ja) {
    const ModifierEntry& mod = lexicon.modifier(*np.complement_modifier_ja);
    if (mod.forced_environment || mod.forced_number) {
      Environment env;
      env.fired_step = 4;
      env.kind = mod.forced_environment.value_or(EnvironmentKind::Denumerated);
      if (env.kind == EnvironmentKind::Denumerated) env.number = mod.forced_number;
      return {env, 4};
    }
  }
  // Step 5: ascriptive NPs match their subject (or appositive anchor).
  if (kind == ReferentialityKind::Ascriptive && ascriptive_shape(np)) {
    if (!anchor_plan) {
      throw BadArgumentError("missing subject plan for ascriptive NP " + std::to_string(np.id));
    }
    const NPNode* anchor_np = nullptr;
    if (np.syntactic_role == SyntacticRole::AppositiveTo) {
      anchor_np = sentence.find_np(*np.appositive_to);
    } else {
      for (const NPNode& other : sentence.nps) {
        if (other.syntactic_role == SyntacticRole::Subject) anchor_np = &other;
      }
    }
    if (!anchor_np) {
      throw BadArgumentError("ascriptive NP " + std::to_string(np.id) + " has no anchor NP");
    }
    return {copy_from_anchor(*anchor_np, *anchor_plan, lexicon), 5};
  }
  // Step 6: object of a mass-countable verb.
  if (np.syntactic_role == SyntacticRole::Object && sentence.main_verb_ja) {
    const VerbEntry& verb = lexicon.verb(*sentence.main_verb_ja);
    if (verb.mass_countable_object) {
      Environment env{EnvironmentKind::MassCountable, std::nullopt, std::nullopt, 6};
      return {env, 6};
    }
  }
  // Step 7: dictionary defaults.
  return {std::nullopt, 7};
}

Environment apply_defaults(const NounEntry& entry) {
  Environment env;
  env.fired_step = 7;
  switch (entry.ncp.major) {
    case MajorNcp::Uncountable:
    case MajorNcp::WeaklyCountable:
      env.kind = EnvironmentKind::MassUncountable;
      env.number = Number::Singular;
      break;
    case MajorNcp::PluraliaTantum:
      // Countable and plural, but with no denumerator in scope: the bare
      // plural of the countable column ("scissors"), not a classifier phrase.
      env.kind = EnvironmentKind::MassCountable;
      env.number = Number::Plural;
      break;
    case MajorNcp::FullyCountable:
    case MajorNcp::StronglyCountable:
      if (entry.default_number == Number::Plural) {
        env.kind = EnvironmentKind::MassCountable;
        env.number = Number::Plural;
      } else {
        env.kind = EnvironmentKind::Denumerated;
        env.number = Number::Singular;
      }
      break;
  }
  return env;
}

RealizationPlan plan_np(const NPNode& np, const Referentiality& referentiality,
                        const std::optional<Environment>& environment, const Lexicon& lexicon,
                        const PlanOptions& options) {
  const NounEntry& entry = lexicon.noun(np.head_ja);
  RealizationPlan plan;
  plan.np_id = np.id;
  plan.referentiality = referentiality;
  plan.trace.push_back("ref.test" + std::to_string(referentiality.fired_test) + ":" +
                       to_string(referentiality.kind));

  const bool bare_pronoun = pronoun_head(entry, lexicon);

  if (np.complement_modifier_ja) {
    plan.postmodifier = lexicon.modifier(*np.complement_modifier_ja).en_countable_form;
  }

  if (referentiality.kind == ReferentialityKind::Generic) {
    // Bare noun phrase; fully countable nouns and pluralia tanta are plural.
    bool plural = entry.ncp.major == MajorNcp::FullyCountable ||
                  entry.ncp.major == MajorNcp::PluraliaTantum;
    plan.surface_head = entry.en_lemma;
    plan.head_number = plural ? Number::Plural : Number::Singular;
    plan.head_irregular_plural = entry.irregular_plural;
    if (entry.ncp.major == MajorNcp::PluraliaTantum) {
      plan.head_irregular_plural = entry.en_lemma;  // lemma is already plural surface
    }
    plan.article = Article::None;
    plan.collective_head = entry.ncp.collective;
    plan.trace.push_back(std::string("gen.bare:") + to_string(plan.head_number));
    return plan;
  }

  if (!environment) {
    throw BadArgumentError("non-generic NP " + std::to_string(np.id) + " needs an environment");
  }
  const Environment& env = *environment;
  plan.environment = env;
  plan.trace.push_back(trace_env(env));

  const ClassifierRule* crule =
      np.classifier_ja ? &lexicon.classifier(*np.classifier_ja) : nullptr;

  auto wrap_with = [&](const std::string& classifier, Number head_number,
                       ComplementNumberRule comp_rule) {
    plan.surface_head = classifier;
    plan.head_number = head_number;
    plan.head_irregular_plural = std::nullopt;
    ClassifierComplement comp;
    bool complement_plural;
    if (comp_rule == ComplementNumberRule::SingularUnlessPt) {
      complement_plural = entry.ncp.major == MajorNcp::PluraliaTantum;
      comp.surface = entry.en_lemma;
    } else {
      // Natural complement shape: countable heads pluralize (a pile of cakes),
      // unbounded ones stay singular (a glass of beer), pluralia tanta keep
      // their plural surface form.
      complement_plural = entry.ncp.major == MajorNcp::FullyCountable ||
                          entry.ncp.major == MajorNcp::StronglyCountable ||
                          entry.ncp.major == MajorNcp::PluraliaTantum;
      bool inflect = entry.ncp.major == MajorNcp::FullyCountable ||
                     entry.ncp.major == MajorNcp::StronglyCountable;
      comp.surface = (complement_plural && inflect)
                         ? pluralize(entry.en_lemma, entry.irregular_plural)
                         : entry.en_lemma;
    }
    comp.number = complement_plural ? Number::Plural : Number::Singular;
    plan.classifier_complement = std::move(comp);
  };

  switch (env.kind) {
    case EnvironmentKind::Denumerated: {
      if (!env.number) {
        throw InternalError("denumerated environment without a number for NP " +
                            std::to_string(np.id));
      }
      Number n = *env.number;
      if (crule && crule->en_classifier_override) {
        plan.trace.push_back("rule.classifier_override:" + crule->ja_classifier + "->" +
                             *crule->en_classifier_override);
        wrap_with(*crule->en_classifier_override, n, crule->complement_number_rule);
      } else if (entry.ncp.major == MajorNcp::Uncountable) {
        if (entry.ncp.semi_countable && n == Number::Singular) {
          // Semi-countable nouns take a/an directly: "a knowledge".
          plan.surface_head = entry.en_lemma;
          plan.head_number = Number::Singular;
          plan.trace.push_back("rule.semi_countable_direct");
        } else {
          if (!entry.default_classifier) {
            throw InternalError("uncountable noun '" + entry.ja_lemma +
                                "' denumerated with no classifier and no override");
          }
          plan.trace.push_back("rule.wrap:" + *entry.default_classifier);
          if (env.fired_step == 1) plan.trace.push_back("ext.plural_classifier_wrap");
          wrap_with(*entry.default_classifier, n, ComplementNumberRule::Default);
        }
      } else if (entry.ncp.major == MajorNcp::PluraliaTantum) {
        if (entry.ncp.pt_pair) {
          if (!entry.default_classifier) {
            throw InternalError("pair pluralia tantum '" + entry.ja_lemma +
                                "' denumerated with no classifier");
          }
          plan.trace.push_back("rule.pt_pair");
          wrap_with(*entry.default_classifier, n, ComplementNumberRule::Default);
        } else {
          if (!entry.denumeration_substitute) {
            throw InternalError("pluralia tantum '" + entry.ja_lemma +
                                "' denumerated with no substitute");
          }
          plan.surface_head = *entry.denumeration_substitute;
          plan.head_number = n;
          plan.trace.push_back("rule.pt_substitute:" + *entry.denumeration_substitute);
        }
      } else {
        plan.surface_head = entry.en_lemma;
        plan.head_number = n;
        plan.head_irregular_plural = entry.irregular_plural;
        plan.collective_head = entry.ncp.collective;
      }
      break;
    }
    case EnvironmentKind::MassCountable: {
      if (entry.ncp.major == MajorNcp::FullyCountable ||
          entry.ncp.major == MajorNcp::StronglyCountable) {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Plural;
        plan.head_irregular_plural = entry.irregular_plural;
        plan.collective_head = entry.ncp.collective;
      } else if (entry.ncp.major == MajorNcp::PluraliaTantum) {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Plural;
        plan.head_irregular_plural = entry.en_lemma;
      } else {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Singular;
      }
      break;
    }
    case EnvironmentKind::MassUncountable: {
      if (entry.ncp.major == MajorNcp::FullyCountable) {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Plural;
        plan.head_irregular_plural = entry.irregular_plural;
        plan.collective_head = entry.ncp.collective;
      } else if (entry.ncp.major == MajorNcp::PluraliaTantum) {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Plural;
        plan.head_irregular_plural = entry.en_lemma;
      } else {
        plan.surface_head = entry.en_lemma;
        plan.head_number = Number::Singular;
      }
      break;
    }
  }
  plan.trace.push_back(std::string("cell.") + to_string(entry.ncp.major) + "." +
                       cell_column(env));

  // Denumerator token: a rendered cardinal, else the translated determiner.
  if (env.kind == EnvironmentKind::Denumerated && np.cardinal) {
    if (np.cardinal_style == CardinalStyle::Digits) {
      plan.denumerator_token = std::to_string(*np.cardinal);
    } else if (*np.cardinal == 1) {
      // "one" in word style surfaces as the indefinite article.
      plan.trace.push_back("rule.one_as_article");
    } else {
      plan.denumerator_token = cardinal_words(*np.cardinal);
    }
  } else if (np.determiner_ja) {
    const ModifierEntry& mod = lexicon.modifier(*np.determiner_ja);
    bool uncountable_surface = env.kind == EnvironmentKind::MassUncountable &&
                               entry.ncp.major != MajorNcp::FullyCountable &&
                               entry.ncp.major != MajorNcp::PluraliaTantum;
    if (mod.en_uncountable_form && uncountable_surface) {
      plan.denumerator_token = *mod.en_uncountable_form;
      plan.trace.push_back("rule.det_uncountable_form");
    } else {
      plan.denumerator_token = mod.en_countable_form;
    }
  }

  // Article slot.
  if (bare_pronoun) {
    plan.article = Article::None;
    plan.trace.push_back("rule.article:bare_pronoun");
  } else if (np.definite) {
    plan.article = Article::The;
    plan.trace.push_back("rule.article:the");
  } else if (env.kind == EnvironmentKind::Denumerated && plan.head_number == Number::Singular &&
             !plan.denumerator_token) {
    plan.article = Article::AAn;
    plan.trace.push_back("rule.article:a_an");
  } else if (options.some_insertion && referentiality.kind == ReferentialityKind::Referential &&
             np.syntactic_role == SyntacticRole::Object && !plan.denumerator_token &&
             (plan.head_number == Number::Plural || env.kind != EnvironmentKind::Denumerated)) {
    plan.article = Article::Some;
    plan.trace.push_back("rule.article:some");
  } else {
    plan.article = Article::None;
  }

  return plan;
}

std::vector<RealizationPlan> resolve_sentence(const SentenceIR& sentence, const Lexicon& lexicon,
                                              const PlanOptions& options) {
  std::unordered_map<int, Referentiality> classes;
  for (const NPNode& np : sentence.nps) {
    classes.emplace(np.id, classify_np(np, sentence, lexicon));
  }

  std::unordered_map<int, RealizationPlan> done;
  auto resolve_one = [&](const NPNode& np, const RealizationPlan* anchor) {
    const Referentiality& ref = classes.at(np.id);
    if (ref.kind == ReferentialityKind::Generic) {
      done.emplace(np.id, plan_np(np, ref, std::nullopt, lexicon, options));
      return;
    }
    EnvironmentResult result = determine_environment(np, sentence, lexicon, ref.kind, anchor);
    Environment env = result.environment ? *result.environment
                                         : apply_defaults(lexicon.noun(np.head_ja));
    done.emplace(np.id, plan_np(np, ref, env, lexicon, options));
  };

  // Non-ascriptive NPs first, then ascriptive ones as their anchors resolve.
  for (const NPNode& np : sentence.nps) {
    if (classes.at(np.id).kind != ReferentialityKind::Ascriptive) resolve_one(np, nullptr);
  }
  const NPNode* subject = nullptr;
  for (const NPNode& np : sentence.nps) {
    if (np.syntactic_role == SyntacticRole::Subject) subject = &np;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (const NPNode& np : sentence.nps) {
      if (done.count(np.id)) continue;
      const RealizationPlan* anchor = nullptr;
      if (np.syntactic_role == SyntacticRole::AppositiveTo) {
        auto it = done.find(*np.appositive_to);
        if (it == done.end()) continue;  // anchor not yet resolved
        anchor = &it->second;
      } else if (subject) {
        auto it = done.find(subject->id);
        if (it == done.end()) continue;
        anchor = &it->second;
      }
      resolve_one(np, anchor);
      progress = true;
    }
  }
  for (const NPNode& np : sentence.nps) {
    if (!done.count(np.id)) {
      throw BadArgumentError("sentence '" + sentence.id + "': ascriptive NP " +
                             std::to_string(np.id) +
                             " cannot be resolved (missing or cyclic anchor)");
    }
  }

  std::vector<RealizationPlan> plans;
  plans.reserve(sentence.nps.size());
  for (const NPNode& np : sentence.nps) plans.push_back(std::move(done.at(np.id)));
  return plans;
}

const char* environment_step_name(int step) {
  switch (step) {
    case 1: return "explicitly plural source";
    case 2: return "forced by determiner";
    case 3: return "numeral + classifier";
    case 4: return "forced by complement modifier";
    case 5: return "ascriptive, matches subject";
    case 6: return "object of a mass-countable verb";
    case 7: return "dictionary default";
  }
  return "?";
}

}  // namespace npgen
