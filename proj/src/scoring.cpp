#include "scoring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "errors.hpp"
#include "source_ir.hpp"

namespace npgen {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int round_percent(double ratio) {
  return static_cast<int>(std::lround(ratio * 100.0));
}

std::string strip_leading_article(const std::string& s) {
  static const char* articles[] = {"a ", "an ", "the ", "some "};
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const char* art : articles) {
    std::string_view a(art);
    if (lower.size() > a.size() && lower.compare(0, a.size(), a) == 0) {
      return s.substr(a.size());
    }
  }
  return s;
}

std::string naive_singular(const std::string& word) {
  if (word.size() > 3 && word.compare(word.size() - 3, 3, "ies") == 0) {
    return word.substr(0, word.size() - 3) + "y";
  }
  if (word.size() > 2 && word.compare(word.size() - 2, 2, "es") == 0) {
    return word.substr(0, word.size() - 2);
  }
  if (word.size() > 1 && word.back() == 's') return word.substr(0, word.size() - 1);
  return word;
}

std::string normalize_number(const std::string& s) {
  std::size_t space = s.rfind(' ');
  std::string head = space == std::string::npos ? s : s.substr(space + 1);
  std::string rest = space == std::string::npos ? "" : s.substr(0, space + 1);
  return rest + naive_singular(head);
}

// Heuristic error category for the breakdown extension.
std::string classify_error(const std::string& hyp, const std::string& ref) {
  std::string h = strip_leading_article(hyp);
  std::string r = strip_leading_article(ref);
  if (h == r) return "article";
  bool h_of = h.find(" of ") != std::string::npos;
  bool r_of = r.find(" of ") != std::string::npos;
  if (h_of != r_of) return "classifier";
  if (normalize_number(h) == normalize_number(r)) return "number";
  return "other";
}

}  // namespace

bool SentenceScore::all_correct() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const NpVerdict& v) { return v.correct; });
}

std::vector<HypothesisSentence> parse_hypotheses(const std::string& text) {
  std::vector<HypothesisSentence> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("hypotheses line " + std::to_string(lineno) + ": " + e.what());
    }
    HypothesisSentence h;
    if (!j.contains("id") || !j["id"].is_string()) {
      throw ParseError("hypotheses line " + std::to_string(lineno) + ": record needs 'id'");
    }
    h.id = j["id"].get<std::string>();
    if (j.contains("diagnostics")) {
      h.had_diagnostics = true;
    } else if (j.contains("nps")) {
      for (const json& jn : j["nps"]) {
        NpVerdict v;
        v.np_id = jn.at("id").get<int>();
        v.hypothesis = jn.at("text").get<std::string>();
        h.nps.push_back(std::move(v));
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HypothesisSentence> parse_hypotheses_file(const std::string& path) {
  return parse_hypotheses(read_file(path));
}

ScoreReport score_hypotheses(const std::vector<HypothesisSentence>& hypotheses,
                             const std::string& gold_corpus_text) {
  std::vector<SentenceIR> gold_sentences = parse_document(gold_corpus_text);

  std::unordered_map<std::string, const HypothesisSentence*> hyp_by_id;
  for (const HypothesisSentence& h : hypotheses) hyp_by_id.emplace(h.id, &h);
  if (hyp_by_id.size() != hypotheses.size()) {
    throw ValidationError("hypotheses contain duplicate sentence ids");
  }
  if (hypotheses.size() != gold_sentences.size()) {
    throw BadIdError("sentence id mismatch: " + std::to_string(hypotheses.size()) +
                     " hypothesis sentences vs " + std::to_string(gold_sentences.size()) +
                     " gold sentences");
  }

  ScoreReport report;
  for (const SentenceIR& gold : gold_sentences) {
    auto it = hyp_by_id.find(gold.id);
    if (it == hyp_by_id.end()) {
      throw BadIdError("gold sentence '" + gold.id + "' missing from hypotheses");
    }
    const HypothesisSentence& hyp = *it->second;
    if (!gold.gold) {
      throw ValidationError("gold sentence '" + gold.id + "' carries no reference translation");
    }
    if (hyp.had_diagnostics) {
      throw BadIdError("sentence '" + gold.id + "' was not translated (diagnostics), cannot score");
    }
    GoldSentence regions = parse_gold_regions(*gold.gold);

    std::unordered_map<int, const NpVerdict*> hyp_nps;
    for (const NpVerdict& v : hyp.nps) hyp_nps.emplace(v.np_id, &v);
    SentenceScore sscore;
    sscore.id = gold.id;
    for (const GoldRegion& region : regions.regions) {
      auto hit = hyp_nps.find(region.np_id);
      if (hit == hyp_nps.end()) {
        throw BadIdError("sentence '" + gold.id + "': hypothesis has no np " +
                         std::to_string(region.np_id));
      }
      NpVerdict v = *hit->second;
      v.reference = region.text;
      v.correct = v.hypothesis == v.reference;
      sscore.verdicts.push_back(std::move(v));
    }
    if (sscore.verdicts.size() != hyp.nps.size()) {
      throw BadIdError("sentence '" + gold.id + "': hypothesis np set does not match gold regions");
    }
    report.np_total += sscore.verdicts.size();
    for (const NpVerdict& v : sscore.verdicts) {
      if (v.correct) ++report.np_correct;
    }
    ++report.sentence_total;
    if (sscore.all_correct()) ++report.sentence_correct;
    report.per_sentence.push_back(std::move(sscore));
  }
  if (report.np_total > 0) {
    report.np_accuracy = static_cast<double>(report.np_correct) / report.np_total;
  }
  if (report.sentence_total > 0) {
    report.sentence_accuracy =
        static_cast<double>(report.sentence_correct) / report.sentence_total;
  }
  return report;
}

ScoreReport score_against_gold_file(const std::string& hypotheses_path,
                                    const std::string& gold_path) {
  return score_hypotheses(parse_hypotheses_file(hypotheses_path), read_file(gold_path));
}

std::string format_score_report(const ScoreReport& report, const ScoreOptions& options) {
  std::ostringstream out;
  out << "articles and number: exact-match accuracy\n";
  std::string np_header = "(" + std::to_string(report.np_total) + ")";
  std::string sent_header = "(" + std::to_string(report.sentence_total) + ")";
  char line[128];
  std::snprintf(line, sizeof(line), "%-10s %-10s %-10s\n", "", "NPs", "Sentences");
  out << line;
  std::snprintf(line, sizeof(line), "%-10s %-10s %-10s\n", "", np_header.c_str(),
                sent_header.c_str());
  out << line;
  std::string np_pct = std::to_string(round_percent(report.np_accuracy)) + "%";
  std::string sent_pct = std::to_string(round_percent(report.sentence_accuracy)) + "%";
  std::snprintf(line, sizeof(line), "%-10s %-10s %-10s\n", "engine", np_pct.c_str(),
                sent_pct.c_str());
  out << line;

  if (options.per_sentence) {
    out << "\nper sentence:\n";
    for (const SentenceScore& s : report.per_sentence) {
      std::size_t ok = 0;
      for (const NpVerdict& v : s.verdicts) {
        if (v.correct) ++ok;
      }
      out << "  " << s.id << "  " << ok << "/" << s.verdicts.size();
      if (ok == s.verdicts.size()) {
        out << "  ok\n";
      } else {
        out << "  WRONG";
        for (const NpVerdict& v : s.verdicts) {
          if (!v.correct) {
            out << " [np " << v.np_id << ": got '" << v.hypothesis << "' want '" << v.reference
                << "']";
          }
        }
        out << "\n";
      }
    }
  }

  if (options.breakdown) {
    std::map<std::string, std::size_t> counts;
    for (const SentenceScore& s : report.per_sentence) {
      for (const NpVerdict& v : s.verdicts) {
        if (!v.correct) ++counts[classify_error(v.hypothesis, v.reference)];
      }
    }
    out << "\nerror breakdown (extension, heuristic):\n";
    for (const char* cat : {"article", "number", "classifier", "other"}) {
      out << "  " << cat << ": " << counts[cat] << "\n";
    }
  }
  return out.str();
}

}  // namespace npgen
