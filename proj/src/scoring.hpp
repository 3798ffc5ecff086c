#pragma once

#include <optional>
#include <string>
#include <vector>

namespace npgen {

struct NpVerdict {
  int np_id = 0;
  bool correct = false;
  std::string hypothesis;
  std::string reference;
};

struct SentenceScore {
  std::string id;
  std::vector<NpVerdict> verdicts;
  bool all_correct() const;
};

struct ScoreReport {
  std::size_t np_total = 0;
  std::size_t np_correct = 0;
  std::size_t sentence_total = 0;
  std::size_t sentence_correct = 0;  // sentences whose every NP verdict is correct
  double np_accuracy = 0.0;          // in [0,1]; 0 when np_total == 0
  double sentence_accuracy = 0.0;
  std::vector<SentenceScore> per_sentence;
};

struct ScoreOptions {
  bool per_sentence = false;
  bool breakdown = false;  // error-category table, an extension to the summary
};

// Hypothesis side of scoring: per-sentence NP strings parsed back from the
// translate output stream.
struct HypothesisSentence {
  std::string id;
  std::vector<NpVerdict> nps;  // only np_id/hypothesis filled
  bool had_diagnostics = false;
};

std::vector<HypothesisSentence> parse_hypotheses(const std::string& text);
std::vector<HypothesisSentence> parse_hypotheses_file(const std::string& path);

// NP correct iff its rendered region exactly matches the gold region. The gold
// side is a corpus file whose sentences carry [[id:text]] regions.
ScoreReport score_against_gold_file(const std::string& hypotheses_path,
                                    const std::string& gold_path);
ScoreReport score_hypotheses(const std::vector<HypothesisSentence>& hypotheses,
                             const std::string& gold_corpus_text);

std::string format_score_report(const ScoreReport& report, const ScoreOptions& options = {});

}  // namespace npgen
