#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "types.hpp"

namespace npgen {

// Noun countability preference: one major class plus at most one minor flag.
struct CountabilityPreference {
  MajorNcp major = MajorNcp::FullyCountable;
  bool collective = false;      // legal only with FullyCountable
  bool semi_countable = false;  // legal only with Uncountable
  bool pt_pair = false;         // legal only with PluraliaTantum

  bool countable_head() const {
    return major == MajorNcp::FullyCountable || major == MajorNcp::StronglyCountable ||
           major == MajorNcp::WeaklyCountable;
  }

  bool operator==(const CountabilityPreference&) const = default;
};

struct NounEntry {
  std::string ja_lemma;
  std::string en_lemma;  // pluralia tanta store the plural surface form
  CountabilityPreference ncp;
  Number default_number = Number::Singular;
  std::optional<std::string> default_classifier;
  std::optional<std::string> irregular_plural;
  std::string semantic_category;
  std::optional<std::string> denumeration_substitute;  // non-pair pluralia tanta

  bool operator==(const NounEntry&) const = default;
};

struct VerbEntry {
  std::string ja_lemma;
  std::string en_lemma;
  bool generic_subject = false;       // die out, evolve
  bool generic_object = false;        // like
  bool mass_countable_object = false; // gather, collect
  bool is_copula = false;             // da, naru

  bool operator==(const VerbEntry&) const = default;
};

struct ModifierEntry {
  std::string ja_lemma;
  std::string en_countable_form;
  std::optional<std::string> en_uncountable_form;  // the many/much pattern
  std::optional<EnvironmentKind> forced_environment;
  bool forces_generic_on_complement = false;  // -muke "for"
  std::optional<Number> forced_number;
  bool is_restrictive = false;  // possessives

  bool operator==(const ModifierEntry&) const = default;
};

enum class ComplementNumberRule : std::uint8_t { SingularUnlessPt, Default };

struct ClassifierRule {
  std::string ja_classifier;
  std::optional<std::string> en_classifier_override;  // kire -> slice
  bool article_suppressed_on_complement = false;
  ComplementNumberRule complement_number_rule = ComplementNumberRule::Default;

  bool operator==(const ClassifierRule&) const = default;
};

// Single-parent category tree with one root.
class SemanticHierarchy {
 public:
  void add(const std::string& category, const std::optional<std::string>& parent);

  bool contains(const std::string& category) const;
  const std::string& root() const { return root_; }
  const std::vector<std::string>& categories() const { return order_; }
  const std::optional<std::string>& parent(const std::string& category) const;

  // True iff cat_a == cat_b or cat_b is an ancestor of cat_a.
  bool is_subsumed(const std::string& cat_a, const std::string& cat_b) const;

  // Throws ValidationError on cycles, missing parents, or multiple roots.
  void validate() const;

  bool operator==(const SemanticHierarchy& other) const {
    return order_ == other.order_ && parent_ == other.parent_;
  }

 private:
  std::vector<std::string> order_;
  std::unordered_map<std::string, std::optional<std::string>> parent_;
  std::string root_;
};

struct LexiconPaths {
  std::string nouns;
  std::string verbs;
  std::string modifiers;
  std::string classifiers;
  std::string hierarchy;
  std::string an_exceptions;  // optional; empty means built-in defaults only
};

// Immutable after load; safe to share across concurrent sentence tasks.
class Lexicon {
 public:
  const NounEntry& noun(const std::string& ja_lemma) const;       // throws UnknownLemmaError
  const VerbEntry& verb(const std::string& ja_lemma) const;       // throws
  const ModifierEntry& modifier(const std::string& ja_lemma) const;
  const ClassifierRule& classifier(const std::string& ja) const;

  const NounEntry* find_noun(const std::string& ja_lemma) const;
  const VerbEntry* find_verb(const std::string& ja_lemma) const;
  const ModifierEntry* find_modifier(const std::string& ja_lemma) const;
  const ClassifierRule* find_classifier(const std::string& ja) const;

  const std::vector<NounEntry>& nouns() const { return nouns_; }
  const std::vector<VerbEntry>& verbs() const { return verbs_; }
  const std::vector<ModifierEntry>& modifiers() const { return modifiers_; }
  const std::vector<ClassifierRule>& classifiers() const { return classifiers_; }
  const SemanticHierarchy& hierarchy() const { return hierarchy_; }
  const std::vector<std::string>& an_exceptions() const { return an_exceptions_; }

  bool operator==(const Lexicon& other) const {
    return nouns_ == other.nouns_ && verbs_ == other.verbs_ &&
           modifiers_ == other.modifiers_ && classifiers_ == other.classifiers_ &&
           hierarchy_ == other.hierarchy_ && an_exceptions_ == other.an_exceptions_;
  }

 private:
  friend Lexicon load_lexicon(const LexiconPaths& paths);
  friend Lexicon load_lexicon_from_strings(const std::string& nouns_tsv,
                                           const std::string& verbs_tsv,
                                           const std::string& modifiers_tsv,
                                           const std::string& classifiers_tsv,
                                           const std::string& hierarchy_tsv,
                                           const std::string& an_exceptions_txt);

  std::vector<NounEntry> nouns_;
  std::vector<VerbEntry> verbs_;
  std::vector<ModifierEntry> modifiers_;
  std::vector<ClassifierRule> classifiers_;
  SemanticHierarchy hierarchy_;
  std::vector<std::string> an_exceptions_;

  std::unordered_map<std::string, std::size_t> noun_index_;
  std::unordered_map<std::string, std::size_t> verb_index_;
  std::unordered_map<std::string, std::size_t> modifier_index_;
  std::unordered_map<std::string, std::size_t> classifier_index_;

  void build_indexes();
  void validate() const;
};

Lexicon load_lexicon(const LexiconPaths& paths);

// Loads nouns.tsv, verbs.tsv, modifiers.tsv, classifiers.tsv, hierarchy.tsv
// and, when present, an_exceptions.txt from one directory.
Lexicon load_lexicon_dir(const std::string& dir);

Lexicon load_lexicon_from_strings(const std::string& nouns_tsv,
                                  const std::string& verbs_tsv,
                                  const std::string& modifiers_tsv,
                                  const std::string& classifiers_tsv,
                                  const std::string& hierarchy_tsv,
                                  const std::string& an_exceptions_txt = "");

void save_lexicon(const Lexicon& lexicon, const LexiconPaths& paths);
void save_lexicon_dir(const Lexicon& lexicon, const std::string& dir);

std::string serialize_nouns(const Lexicon& lexicon);
std::string serialize_verbs(const Lexicon& lexicon);
std::string serialize_modifiers(const Lexicon& lexicon);
std::string serialize_classifiers(const Lexicon& lexicon);
std::string serialize_hierarchy(const Lexicon& lexicon);
std::string serialize_an_exceptions(const Lexicon& lexicon);

}  // namespace npgen
