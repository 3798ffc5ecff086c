#include "lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"

namespace npgen {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path);
  out << text;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Iterates non-comment records of a line-oriented table.
template <typename Fn>
void for_each_record(const std::string& text, const std::string& source, int want_fields, Fn fn) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_cr(raw);
    if (is_blank_or_comment(line)) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (want_fields > 0 && static_cast<int>(fields.size()) != want_fields) {
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(want_fields) + " tab-separated fields, got " +
                       std::to_string(fields.size()));
    }
    fn(fields, lineno);
  }
}

std::optional<std::string> opt_field(const std::string& f) {
  if (f == "-" || f.empty()) return std::nullopt;
  return f;
}

std::string field_or_dash(const std::optional<std::string>& f) {
  return f ? *f : "-";
}

Number parse_number(const std::string& s, const std::string& where) {
  if (s == "singular") return Number::Singular;
  if (s == "plural") return Number::Plural;
  throw ParseError(where + ": bad number value '" + s + "'");
}

CountabilityPreference parse_ncp(const std::string& s, const std::string& where) {
  CountabilityPreference ncp;
  if (s == "fully_countable") {
    ncp.major = MajorNcp::FullyCountable;
  } else if (s == "fully_countable.collective") {
    ncp.major = MajorNcp::FullyCountable;
    ncp.collective = true;
  } else if (s == "strongly_countable") {
    ncp.major = MajorNcp::StronglyCountable;
  } else if (s == "weakly_countable") {
    ncp.major = MajorNcp::WeaklyCountable;
  } else if (s == "uncountable") {
    ncp.major = MajorNcp::Uncountable;
  } else if (s == "uncountable.semi_countable") {
    ncp.major = MajorNcp::Uncountable;
    ncp.semi_countable = true;
  } else if (s == "pluralia_tantum") {
    ncp.major = MajorNcp::PluraliaTantum;
  } else if (s == "pluralia_tantum.pair") {
    ncp.major = MajorNcp::PluraliaTantum;
    ncp.pt_pair = true;
  } else {
    throw ParseError(where + ": bad countability preference '" + s + "'");
  }
  return ncp;
}

std::string ncp_token(const CountabilityPreference& ncp) {
  switch (ncp.major) {
    case MajorNcp::FullyCountable:
      return ncp.collective ? "fully_countable.collective" : "fully_countable";
    case MajorNcp::StronglyCountable: return "strongly_countable";
    case MajorNcp::WeaklyCountable: return "weakly_countable";
    case MajorNcp::Uncountable:
      return ncp.semi_countable ? "uncountable.semi_countable" : "uncountable";
    case MajorNcp::PluraliaTantum:
      return ncp.pt_pair ? "pluralia_tantum.pair" : "pluralia_tantum";
  }
  return "?";
}

EnvironmentKind parse_env_kind(const std::string& s, const std::string& where) {
  if (s == "denumerated") return EnvironmentKind::Denumerated;
  if (s == "mass_countable") return EnvironmentKind::MassCountable;
  if (s == "mass_uncountable") return EnvironmentKind::MassUncountable;
  throw ParseError(where + ": bad environment kind '" + s + "'");
}

std::vector<std::string> split_flags(const std::string& s) {
  std::vector<std::string> flags;
  if (s == "-" || s.empty()) return flags;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      flags.push_back(s.substr(start));
      return flags;
    }
    flags.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<NounEntry> parse_nouns(const std::string& text, const std::string& source) {
  std::vector<NounEntry> entries;
  for_each_record(text, source, 8, [&](const std::vector<std::string>& f, int lineno) {
    std::string where = source + ":" + std::to_string(lineno);
    NounEntry e;
    e.ja_lemma = f[0];
    e.en_lemma = f[1];
    e.ncp = parse_ncp(f[2], where);
    e.default_number = parse_number(f[3], where);
    e.default_classifier = opt_field(f[4]);
    e.irregular_plural = opt_field(f[5]);
    e.semantic_category = f[6];
    e.denumeration_substitute = opt_field(f[7]);
    if (e.ja_lemma.empty() || e.en_lemma.empty() || e.semantic_category.empty()) {
      throw ParseError(where + ": noun record has empty key field");
    }
    entries.push_back(std::move(e));
  });
  return entries;
}

std::vector<VerbEntry> parse_verbs(const std::string& text, const std::string& source) {
  std::vector<VerbEntry> entries;
  for_each_record(text, source, 3, [&](const std::vector<std::string>& f, int lineno) {
    std::string where = source + ":" + std::to_string(lineno);
    VerbEntry e;
    e.ja_lemma = f[0];
    e.en_lemma = f[1];
    for (const std::string& flag : split_flags(f[2])) {
      if (flag == "generic_subject") e.generic_subject = true;
      else if (flag == "generic_object") e.generic_object = true;
      else if (flag == "mass_countable_object") e.mass_countable_object = true;
      else if (flag == "copula") e.is_copula = true;
      else throw ParseError(where + ": bad verb flag '" + flag + "'");
    }
    entries.push_back(std::move(e));
  });
  return entries;
}

std::vector<ModifierEntry> parse_modifiers(const std::string& text, const std::string& source) {
  std::vector<ModifierEntry> entries;
  for_each_record(text, source, 6, [&](const std::vector<std::string>& f, int lineno) {
    std::string where = source + ":" + std::to_string(lineno);
    ModifierEntry e;
    e.ja_lemma = f[0];
    e.en_countable_form = f[1];
    e.en_uncountable_form = opt_field(f[2]);
    if (auto env = opt_field(f[3])) e.forced_environment = parse_env_kind(*env, where);
    if (auto num = opt_field(f[4])) e.forced_number = parse_number(*num, where);
    for (const std::string& flag : split_flags(f[5])) {
      if (flag == "generic_complement") e.forces_generic_on_complement = true;
      else if (flag == "restrictive") e.is_restrictive = true;
      else throw ParseError(where + ": bad modifier flag '" + flag + "'");
    }
    entries.push_back(std::move(e));
  });
  return entries;
}

std::vector<ClassifierRule> parse_classifiers(const std::string& text, const std::string& source) {
  std::vector<ClassifierRule> entries;
  for_each_record(text, source, 4, [&](const std::vector<std::string>& f, int lineno) {
    std::string where = source + ":" + std::to_string(lineno);
    ClassifierRule r;
    r.ja_classifier = f[0];
    r.en_classifier_override = opt_field(f[1]);
    if (f[2] == "singular_unless_pt") r.complement_number_rule = ComplementNumberRule::SingularUnlessPt;
    else if (f[2] == "default") r.complement_number_rule = ComplementNumberRule::Default;
    else throw ParseError(where + ": bad complement number rule '" + f[2] + "'");
    for (const std::string& flag : split_flags(f[3])) {
      if (flag == "suppress_complement_article") r.article_suppressed_on_complement = true;
      else throw ParseError(where + ": bad classifier flag '" + flag + "'");
    }
    entries.push_back(std::move(r));
  });
  return entries;
}

SemanticHierarchy parse_hierarchy(const std::string& text, const std::string& source) {
  SemanticHierarchy h;
  for_each_record(text, source, 2, [&](const std::vector<std::string>& f, int lineno) {
    std::string where = source + ":" + std::to_string(lineno);
    if (f[0].empty()) throw ParseError(where + ": empty category name");
    h.add(f[0], opt_field(f[1]));
  });
  h.validate();
  return h;
}

std::vector<std::string> parse_an_exceptions(const std::string& text) {
  std::vector<std::string> words;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_cr(raw);
    if (is_blank_or_comment(line)) continue;
    words.push_back(line);
  }
  return words;
}

}  // namespace

void SemanticHierarchy::add(const std::string& category, const std::optional<std::string>& parent) {
  if (parent_.count(category)) {
    throw ValidationError("hierarchy: duplicate category '" + category + "'");
  }
  order_.push_back(category);
  parent_[category] = parent;
  if (!parent) root_ = category;
}

bool SemanticHierarchy::contains(const std::string& category) const {
  return parent_.count(category) > 0;
}

const std::optional<std::string>& SemanticHierarchy::parent(const std::string& category) const {
  auto it = parent_.find(category);
  if (it == parent_.end()) throw BadIdError("unknown semantic category '" + category + "'");
  return it->second;
}

bool SemanticHierarchy::is_subsumed(const std::string& cat_a, const std::string& cat_b) const {
  if (!contains(cat_a)) throw BadIdError("unknown semantic category '" + cat_a + "'");
  if (!contains(cat_b)) throw BadIdError("unknown semantic category '" + cat_b + "'");
  const std::string* cur = &cat_a;
  for (;;) {
    if (*cur == cat_b) return true;
    const auto& parent = parent_.at(*cur);
    if (!parent) return false;
    cur = &*parent;
  }
}

void SemanticHierarchy::validate() const {
  int roots = 0;
  for (const auto& [cat, parent] : parent_) {
    if (!parent) {
      ++roots;
      continue;
    }
    if (!parent_.count(*parent)) {
      throw ValidationError("hierarchy: category '" + cat + "' has unknown parent '" + *parent + "'");
    }
  }
  if (roots != 1) {
    throw ValidationError("hierarchy: expected exactly one root, found " + std::to_string(roots));
  }
  // Walk each category to the root; revisiting more nodes than exist means a cycle.
  for (const auto& [cat, parent] : parent_) {
    (void)parent;
    std::size_t steps = 0;
    const std::string* cur = &cat;
    while (parent_.at(*cur)) {
      cur = &*parent_.at(*cur);
      if (++steps > parent_.size()) {
        throw ValidationError("hierarchy: cycle detected at category '" + cat + "'");
      }
    }
  }
}

const NounEntry& Lexicon::noun(const std::string& ja_lemma) const {
  if (const NounEntry* e = find_noun(ja_lemma)) return *e;
  throw UnknownLemmaError(ja_lemma, "noun");
}

const VerbEntry& Lexicon::verb(const std::string& ja_lemma) const {
  if (const VerbEntry* e = find_verb(ja_lemma)) return *e;
  throw UnknownLemmaError(ja_lemma, "verb");
}

const ModifierEntry& Lexicon::modifier(const std::string& ja_lemma) const {
  if (const ModifierEntry* e = find_modifier(ja_lemma)) return *e;
  throw UnknownLemmaError(ja_lemma, "modifier");
}

const ClassifierRule& Lexicon::classifier(const std::string& ja) const {
  if (const ClassifierRule* e = find_classifier(ja)) return *e;
  throw UnknownLemmaError(ja, "classifier");
}

const NounEntry* Lexicon::find_noun(const std::string& ja_lemma) const {
  auto it = noun_index_.find(ja_lemma);
  return it == noun_index_.end() ? nullptr : &nouns_[it->second];
}

const VerbEntry* Lexicon::find_verb(const std::string& ja_lemma) const {
  auto it = verb_index_.find(ja_lemma);
  return it == verb_index_.end() ? nullptr : &verbs_[it->second];
}

const ModifierEntry* Lexicon::find_modifier(const std::string& ja_lemma) const {
  auto it = modifier_index_.find(ja_lemma);
  return it == modifier_index_.end() ? nullptr : &modifiers_[it->second];
}

const ClassifierRule* Lexicon::find_classifier(const std::string& ja) const {
  auto it = classifier_index_.find(ja);
  return it == classifier_index_.end() ? nullptr : &classifiers_[it->second];
}

void Lexicon::build_indexes() {
  for (std::size_t i = 0; i < nouns_.size(); ++i) {
    if (!noun_index_.emplace(nouns_[i].ja_lemma, i).second) {
      throw ValidationError("nouns: duplicate entry for '" + nouns_[i].ja_lemma + "'");
    }
  }
  for (std::size_t i = 0; i < verbs_.size(); ++i) {
    if (!verb_index_.emplace(verbs_[i].ja_lemma, i).second) {
      throw ValidationError("verbs: duplicate entry for '" + verbs_[i].ja_lemma + "'");
    }
  }
  for (std::size_t i = 0; i < modifiers_.size(); ++i) {
    if (!modifier_index_.emplace(modifiers_[i].ja_lemma, i).second) {
      throw ValidationError("modifiers: duplicate entry for '" + modifiers_[i].ja_lemma + "'");
    }
  }
  for (std::size_t i = 0; i < classifiers_.size(); ++i) {
    if (!classifier_index_.emplace(classifiers_[i].ja_classifier, i).second) {
      throw ValidationError("classifiers: duplicate rule for '" + classifiers_[i].ja_classifier + "'");
    }
  }
}

void Lexicon::validate() const {
  for (const NounEntry& e : nouns_) {
    const std::string who = "noun '" + e.ja_lemma + "'";
    const CountabilityPreference& ncp = e.ncp;
    int minors = (ncp.collective ? 1 : 0) + (ncp.semi_countable ? 1 : 0) + (ncp.pt_pair ? 1 : 0);
    if (minors > 1) throw ValidationError(who + ": minor countability flags are mutually exclusive");
    if (ncp.collective && ncp.major != MajorNcp::FullyCountable) {
      throw ValidationError(who + ": collective is legal only for fully countable nouns");
    }
    if (ncp.semi_countable && ncp.major != MajorNcp::Uncountable) {
      throw ValidationError(who + ": semi_countable is legal only for uncountable nouns");
    }
    if (ncp.pt_pair && ncp.major != MajorNcp::PluraliaTantum) {
      throw ValidationError(who + ": pair is legal only for pluralia tanta");
    }
    if ((ncp.major == MajorNcp::Uncountable || ncp.pt_pair) && !e.default_classifier) {
      throw ValidationError(who + ": uncountable and pair pluralia tanta entries require a default classifier");
    }
    if (ncp.major == MajorNcp::PluraliaTantum && e.default_number != Number::Plural) {
      throw ValidationError(who + ": pluralia tanta must default to plural");
    }
    if (e.default_number == Number::Plural && ncp.major != MajorNcp::FullyCountable &&
        ncp.major != MajorNcp::StronglyCountable && ncp.major != MajorNcp::PluraliaTantum) {
      throw ValidationError(who + ": default plural is legal only for fully countable, strongly countable, or pluralia tanta");
    }
    if (!hierarchy_.contains(e.semantic_category)) {
      throw ValidationError(who + ": semantic category '" + e.semantic_category + "' is not in the hierarchy");
    }
  }
  for (const VerbEntry& e : verbs_) {
    if (e.generic_subject && e.is_copula) {
      throw ValidationError("verb '" + e.ja_lemma + "': generic_subject and copula are mutually exclusive");
    }
  }
  for (const ModifierEntry& e : modifiers_) {
    const std::string who = "modifier '" + e.ja_lemma + "'";
    if (e.en_uncountable_form &&
        (!e.forced_environment || *e.forced_environment != EnvironmentKind::MassUncountable)) {
      throw ValidationError(who + ": an uncountable form requires a mass_uncountable forced environment");
    }
    if (e.forced_environment && *e.forced_environment == EnvironmentKind::Denumerated &&
        !e.forced_number) {
      throw ValidationError(who + ": a forced denumerated environment requires a forced number");
    }
  }
  for (const ClassifierRule& r : classifiers_) {
    if (r.en_classifier_override && !r.article_suppressed_on_complement) {
      throw ValidationError("classifier '" + r.ja_classifier +
                            "': an override rule must state complete complement behavior (suppress_complement_article)");
    }
  }
}

Lexicon load_lexicon_from_strings(const std::string& nouns_tsv, const std::string& verbs_tsv,
                                  const std::string& modifiers_tsv,
                                  const std::string& classifiers_tsv,
                                  const std::string& hierarchy_tsv,
                                  const std::string& an_exceptions_txt) {
  Lexicon lex;
  lex.hierarchy_ = parse_hierarchy(hierarchy_tsv, "hierarchy.tsv");
  lex.nouns_ = parse_nouns(nouns_tsv, "nouns.tsv");
  lex.verbs_ = parse_verbs(verbs_tsv, "verbs.tsv");
  lex.modifiers_ = parse_modifiers(modifiers_tsv, "modifiers.tsv");
  lex.classifiers_ = parse_classifiers(classifiers_tsv, "classifiers.tsv");
  lex.an_exceptions_ = parse_an_exceptions(an_exceptions_txt);
  lex.build_indexes();
  lex.validate();
  return lex;
}

Lexicon load_lexicon(const LexiconPaths& paths) {
  Lexicon lex;
  lex.hierarchy_ = parse_hierarchy(read_file(paths.hierarchy), paths.hierarchy);
  lex.nouns_ = parse_nouns(read_file(paths.nouns), paths.nouns);
  lex.verbs_ = parse_verbs(read_file(paths.verbs), paths.verbs);
  lex.modifiers_ = parse_modifiers(read_file(paths.modifiers), paths.modifiers);
  lex.classifiers_ = parse_classifiers(read_file(paths.classifiers), paths.classifiers);
  if (!paths.an_exceptions.empty()) {
    lex.an_exceptions_ = parse_an_exceptions(read_file(paths.an_exceptions));
  }
  lex.build_indexes();
  lex.validate();
  return lex;
}

Lexicon load_lexicon_dir(const std::string& dir) {
  LexiconPaths paths;
  paths.nouns = dir + "/nouns.tsv";
  paths.verbs = dir + "/verbs.tsv";
  paths.modifiers = dir + "/modifiers.tsv";
  paths.classifiers = dir + "/classifiers.tsv";
  paths.hierarchy = dir + "/hierarchy.tsv";
  std::ifstream probe(dir + "/an_exceptions.txt");
  if (probe) paths.an_exceptions = dir + "/an_exceptions.txt";
  return load_lexicon(paths);
}

std::string serialize_nouns(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# ja_lemma\ten_lemma\tcountability\tdefault_number\tdefault_classifier\t"
         "irregular_plural\tsemantic_category\tdenumeration_substitute\n";
  for (const NounEntry& e : lexicon.nouns()) {
    out << e.ja_lemma << '\t' << e.en_lemma << '\t' << ncp_token(e.ncp) << '\t'
        << to_string(e.default_number) << '\t' << field_or_dash(e.default_classifier) << '\t'
        << field_or_dash(e.irregular_plural) << '\t' << e.semantic_category << '\t'
        << field_or_dash(e.denumeration_substitute) << '\n';
  }
  return out.str();
}

std::string serialize_verbs(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# ja_lemma\ten_lemma\tflags\n";
  for (const VerbEntry& e : lexicon.verbs()) {
    std::string flags;
    auto add = [&flags](const char* f) {
      if (!flags.empty()) flags += ',';
      flags += f;
    };
    if (e.generic_subject) add("generic_subject");
    if (e.generic_object) add("generic_object");
    if (e.mass_countable_object) add("mass_countable_object");
    if (e.is_copula) add("copula");
    if (flags.empty()) flags = "-";
    out << e.ja_lemma << '\t' << e.en_lemma << '\t' << flags << '\n';
  }
  return out.str();
}

std::string serialize_modifiers(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# ja_lemma\ten_countable_form\ten_uncountable_form\tforced_environment\t"
         "forced_number\tflags\n";
  for (const ModifierEntry& e : lexicon.modifiers()) {
    std::string flags;
    auto add = [&flags](const char* f) {
      if (!flags.empty()) flags += ',';
      flags += f;
    };
    if (e.forces_generic_on_complement) add("generic_complement");
    if (e.is_restrictive) add("restrictive");
    if (flags.empty()) flags = "-";
    out << e.ja_lemma << '\t' << e.en_countable_form << '\t'
        << field_or_dash(e.en_uncountable_form) << '\t'
        << (e.forced_environment ? to_string(*e.forced_environment) : "-") << '\t'
        << (e.forced_number ? to_string(*e.forced_number) : "-") << '\t' << flags << '\n';
  }
  return out.str();
}

std::string serialize_classifiers(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# ja_classifier\ten_override\tcomplement_number_rule\tflags\n";
  for (const ClassifierRule& r : lexicon.classifiers()) {
    out << r.ja_classifier << '\t' << field_or_dash(r.en_classifier_override) << '\t'
        << (r.complement_number_rule == ComplementNumberRule::SingularUnlessPt
                ? "singular_unless_pt"
                : "default")
        << '\t' << (r.article_suppressed_on_complement ? "suppress_complement_article" : "-")
        << '\n';
  }
  return out.str();
}

std::string serialize_hierarchy(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# child\tparent\n";
  const SemanticHierarchy& h = lexicon.hierarchy();
  for (const std::string& cat : h.categories()) {
    const auto& parent = h.parent(cat);
    out << cat << '\t' << (parent ? *parent : "-") << '\n';
  }
  return out.str();
}

std::string serialize_an_exceptions(const Lexicon& lexicon) {
  std::ostringstream out;
  for (const std::string& w : lexicon.an_exceptions()) out << w << '\n';
  return out.str();
}

void save_lexicon(const Lexicon& lexicon, const LexiconPaths& paths) {
  write_file(paths.nouns, serialize_nouns(lexicon));
  write_file(paths.verbs, serialize_verbs(lexicon));
  write_file(paths.modifiers, serialize_modifiers(lexicon));
  write_file(paths.classifiers, serialize_classifiers(lexicon));
  write_file(paths.hierarchy, serialize_hierarchy(lexicon));
  if (!paths.an_exceptions.empty()) {
    write_file(paths.an_exceptions, serialize_an_exceptions(lexicon));
  }
}

void save_lexicon_dir(const Lexicon& lexicon, const std::string& dir) {
  LexiconPaths paths;
  paths.nouns = dir + "/nouns.tsv";
  paths.verbs = dir + "/verbs.tsv";
  paths.modifiers = dir + "/modifiers.tsv";
  paths.classifiers = dir + "/classifiers.tsv";
  paths.hierarchy = dir + "/hierarchy.tsv";
  if (!lexicon.an_exceptions().empty()) paths.an_exceptions = dir + "/an_exceptions.txt";
  save_lexicon(lexicon, paths);
}

}  // namespace npgen
