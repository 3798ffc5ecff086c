#include "source_ir.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"
#include "template_text.hpp"

namespace npgen {

using nlohmann::json;

namespace {

SyntacticRole parse_role(const std::string& s, const std::string& where) {
  if (s == "SUBJECT") return SyntacticRole::Subject;
  if (s == "OBJECT") return SyntacticRole::Object;
  if (s == "COPULA_COMPLEMENT") return SyntacticRole::CopulaComplement;
  if (s == "APPOSITIVE_TO") return SyntacticRole::AppositiveTo;
  if (s == "OTHER") return SyntacticRole::Other;
  throw ParseError(where + ": bad syntactic_role '" + s + "'");
}

NPNode parse_np(const json& j, const std::string& where) {
  NPNode np;
  if (!j.contains("id") || !j["id"].is_number_integer()) {
    throw ParseError(where + ": np record needs an integer 'id'");
  }
  np.id = j["id"].get<int>();
  if (!j.contains("head_ja") || !j["head_ja"].is_string()) {
    throw ParseError(where + ": np " + std::to_string(np.id) + " needs 'head_ja'");
  }
  np.head_ja = j["head_ja"].get<std::string>();
  np.explicit_plural = j.value("explicit_plural", false);
  if (j.contains("determiner_ja")) np.determiner_ja = j["determiner_ja"].get<std::string>();
  if (j.contains("cardinal")) {
    int c = j["cardinal"].get<int>();
    if (c <= 0) throw ParseError(where + ": np " + std::to_string(np.id) + ": cardinal must be positive");
    np.cardinal = c;
  }
  std::string style = j.value("cardinal_style", "digits");
  if (style == "digits") np.cardinal_style = CardinalStyle::Digits;
  else if (style == "words") np.cardinal_style = CardinalStyle::Words;
  else throw ParseError(where + ": bad cardinal_style '" + style + "'");
  if (j.contains("classifier_ja")) np.classifier_ja = j["classifier_ja"].get<std::string>();
  np.restrictively_modified = j.value("restrictively_modified", false);
  np.syntactic_role = parse_role(j.value("syntactic_role", "OTHER"), where);
  if (j.contains("appositive_to")) np.appositive_to = j["appositive_to"].get<int>();
  if (j.contains("purpose_target_of")) np.purpose_target_of = j["purpose_target_of"].get<int>();
  if (j.contains("complement_modifier_ja")) {
    np.complement_modifier_ja = j["complement_modifier_ja"].get<std::string>();
  }
  np.definite = j.value("definite", false);

  if (np.cardinal && !np.classifier_ja) {
    throw ParseError(where + ": np " + std::to_string(np.id) +
                     ": a cardinal requires a classifier (numeral+classifier construction)");
  }
  if ((np.syntactic_role == SyntacticRole::AppositiveTo) != np.appositive_to.has_value()) {
    throw ParseError(where + ": np " + std::to_string(np.id) +
                     ": appositive_to must be present exactly when syntactic_role is APPOSITIVE_TO");
  }
  return np;
}

void check_sentence(const SentenceIR& s, const std::string& where) {
  std::unordered_set<int> ids;
  int subjects = 0;
  for (const NPNode& np : s.nps) {
    if (!ids.insert(np.id).second) {
      throw ParseError(where + ": duplicate np id " + std::to_string(np.id));
    }
    if (np.syntactic_role == SyntacticRole::Subject) ++subjects;
  }
  if (subjects > 1) throw ParseError(where + ": at most one NP may be the SUBJECT");
  for (const NPNode& np : s.nps) {
    if (np.appositive_to && !ids.count(*np.appositive_to)) {
      throw ParseError(where + ": np " + std::to_string(np.id) + " is appositive to missing np " +
                       std::to_string(*np.appositive_to));
    }
    if (np.purpose_target_of && !ids.count(*np.purpose_target_of)) {
      throw ParseError(where + ": np " + std::to_string(np.id) + " has purpose target missing np " +
                       std::to_string(*np.purpose_target_of));
    }
  }

  TemplateParts parts = parse_template(s.template_text, where);
  std::unordered_set<int> placed;
  for (int id : parts.np_placeholders) {
    if (!ids.count(id)) {
      throw ParseError(where + ": template references missing np " + std::to_string(id));
    }
    if (!placed.insert(id).second) {
      throw ParseError(where + ": np " + std::to_string(id) + " appears more than once in the template");
    }
  }
  for (int id : parts.be_slots) {
    if (!ids.count(id)) {
      throw ParseError(where + ": agreement slot references missing np " + std::to_string(id));
    }
  }
}

}  // namespace

const NPNode* SentenceIR::find_np(int np_id) const {
  for (const NPNode& np : nps) {
    if (np.id == np_id) return &np;
  }
  return nullptr;
}

std::vector<SentenceIR> parse_document(const std::string& text) {
  std::vector<SentenceIR> sentences;
  std::unordered_set<std::string> seen_ids;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    }
    if (blank || line[line.find_first_not_of(" \t")] == '#') continue;

    const std::string where = "line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    try {
      SentenceIR s;
      if (!j.contains("id") || !j["id"].is_string()) {
        throw ParseError(where + ": sentence record needs a string 'id'");
      }
      s.id = j["id"].get<std::string>();
      if (!seen_ids.insert(s.id).second) {
        throw ParseError(where + ": duplicate sentence id '" + s.id + "'");
      }
      if (j.contains("main_verb_ja")) s.main_verb_ja = j["main_verb_ja"].get<std::string>();
      if (!j.contains("template") || !j["template"].is_string()) {
        throw ParseError(where + ": sentence record needs a string 'template'");
      }
      s.template_text = j["template"].get<std::string>();
      if (j.contains("gold")) s.gold = j["gold"].get<std::string>();
      if (j.contains("nps")) {
        for (const json& jn : j["nps"]) s.nps.push_back(parse_np(jn, where));
      }
      check_sentence(s, where + " (sentence '" + s.id + "')");
      sentences.push_back(std::move(s));
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return sentences;
}

std::vector<SentenceIR> parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_sentence(const SentenceIR& s) {
  json j;
  j["id"] = s.id;
  if (s.main_verb_ja) j["main_verb_ja"] = *s.main_verb_ja;
  j["template"] = s.template_text;
  if (s.gold) j["gold"] = *s.gold;
  json nps = json::array();
  for (const NPNode& np : s.nps) {
    json jn;
    jn["id"] = np.id;
    jn["head_ja"] = np.head_ja;
    if (np.explicit_plural) jn["explicit_plural"] = true;
    if (np.determiner_ja) jn["determiner_ja"] = *np.determiner_ja;
    if (np.cardinal) jn["cardinal"] = *np.cardinal;
    if (np.cardinal_style == CardinalStyle::Words) jn["cardinal_style"] = "words";
    if (np.classifier_ja) jn["classifier_ja"] = *np.classifier_ja;
    if (np.restrictively_modified) jn["restrictively_modified"] = true;
    jn["syntactic_role"] = to_string(np.syntactic_role);
    if (np.appositive_to) jn["appositive_to"] = *np.appositive_to;
    if (np.purpose_target_of) jn["purpose_target_of"] = *np.purpose_target_of;
    if (np.complement_modifier_ja) jn["complement_modifier_ja"] = *np.complement_modifier_ja;
    if (np.definite) jn["definite"] = true;
    nps.push_back(std::move(jn));
  }
  j["nps"] = std::move(nps);
  return j.dump();
}

std::string serialize_document(const std::vector<SentenceIR>& sentences) {
  std::string out;
  for (const SentenceIR& s : sentences) {
    out += serialize_sentence(s);
    out += '\n';
  }
  return out;
}

std::vector<Diagnostic> validate_against_lexicon(const SentenceIR& sentence, const Lexicon& lexicon) {
  std::vector<Diagnostic> diags;
  auto add = [&diags](std::string kind, std::string detail, std::optional<int> np_id) {
    diags.push_back(Diagnostic{std::move(kind), std::move(detail), np_id});
  };

  if (sentence.main_verb_ja && !lexicon.find_verb(*sentence.main_verb_ja)) {
    add("unknown_verb", *sentence.main_verb_ja, std::nullopt);
  }
  const NPNode* subject = nullptr;
  for (const NPNode& np : sentence.nps) {
    if (np.syntactic_role == SyntacticRole::Subject) subject = &np;
  }
  for (const NPNode& np : sentence.nps) {
    if (!lexicon.find_noun(np.head_ja)) add("unknown_noun", np.head_ja, np.id);
    if (np.determiner_ja && !lexicon.find_modifier(*np.determiner_ja)) {
      add("unknown_modifier", *np.determiner_ja, np.id);
    }
    if (np.complement_modifier_ja && !lexicon.find_modifier(*np.complement_modifier_ja)) {
      add("unknown_modifier", *np.complement_modifier_ja, np.id);
    }
    if (np.classifier_ja && !lexicon.find_classifier(*np.classifier_ja)) {
      add("unknown_classifier", *np.classifier_ja, np.id);
    }
    if (np.syntactic_role == SyntacticRole::CopulaComplement && !subject) {
      add("missing_subject", "copula complement has no subject NP to agree with", np.id);
    }
  }
  // Appositive anchors must resolve without cycles.
  for (const NPNode& np : sentence.nps) {
    if (!np.appositive_to) continue;
    std::unordered_set<int> seen{np.id};
    const NPNode* cur = sentence.find_np(*np.appositive_to);
    bool bad = false;
    while (cur) {
      if (!seen.insert(cur->id).second) {
        add("appositive_cycle", "appositive chain revisits np " + std::to_string(cur->id), np.id);
        bad = true;
        break;
      }
      if (cur->syntactic_role == SyntacticRole::CopulaComplement && !subject) {
        add("missing_subject", "appositive anchor np " + std::to_string(cur->id) +
                                   " is a copula complement with no subject",
            np.id);
        bad = true;
        break;
      }
      if (!cur->appositive_to) break;
      cur = sentence.find_np(*cur->appositive_to);
    }
    (void)bad;
  }
  return diags;
}

GoldSentence parse_gold_regions(const std::string& gold) {
  GoldSentence out;
  std::size_t pos = 0;
  while (pos < gold.size()) {
    std::size_t open = gold.find("[[", pos);
    if (open == std::string::npos) {
      out.plain += gold.substr(pos);
      break;
    }
    out.plain += gold.substr(pos, open - pos);
    std::size_t colon = gold.find(':', open + 2);
    std::size_t close = gold.find("]]", open + 2);
    if (colon == std::string::npos || close == std::string::npos || colon > close) {
      throw ParseError("bad gold region delimiter near '" + gold.substr(open, 12) + "'");
    }
    GoldRegion region;
    try {
      region.np_id = std::stoi(gold.substr(open + 2, colon - open - 2));
    } catch (const std::exception&) {
      throw ParseError("bad gold region id in '" + gold.substr(open, close - open + 2) + "'");
    }
    region.text = gold.substr(colon + 1, close - colon - 1);
    out.plain += region.text;
    out.regions.push_back(std::move(region));
    pos = close + 2;
  }
  return out;
}

}  // namespace npgen
