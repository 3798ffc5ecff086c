#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "errors.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"
#include "scoring.hpp"

using namespace npgen;

namespace {

Lexicon bundled() { return load_lexicon_dir(std::string(NPGEN_DATA_DIR) + "/lexicon"); }

std::string showcase_path() {
  return std::string(NPGEN_DATA_DIR) + "/corpora/showcase.npir";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("identical hypotheses score 100 percent on both levels") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document_file(showcase_path());
  std::string hyp = format_translation_output(translate_corpus(doc, lex));
  ScoreReport report = score_hypotheses(parse_hypotheses(hyp), read_file(showcase_path()));
  CHECK(report.np_total == 8);
  CHECK(report.np_correct == 8);
  CHECK(report.sentence_total == 4);
  CHECK(report.sentence_correct == 4);
  CHECK(report.np_accuracy == doctest::Approx(1.0));
  CHECK(report.sentence_accuracy == doctest::Approx(1.0));
}

TEST_CASE("one wrong NP in a two-NP sentence halves NP accuracy and zeroes sentences") {
  std::string gold =
      R"({"id":"s1","template":"{np:1} {np:2}","gold":"[[1:a dog]] [[2:two cats]]","nps":[{"id":1,"head_ja":"inu"},{"id":2,"head_ja":"neko"}]})"
      "\n";
  std::string hyp =
      R"({"id":"s1","nps":[{"id":1,"text":"a dog"},{"id":2,"text":"two cat"}]})"
      "\n";
  ScoreReport report = score_hypotheses(parse_hypotheses(hyp), gold);
  CHECK(report.np_total == 2);
  CHECK(report.np_correct == 1);
  CHECK(report.sentence_correct == 0);
  CHECK(report.np_accuracy == doctest::Approx(0.5));
  CHECK(report.sentence_accuracy == doctest::Approx(0.0));
}

TEST_CASE("sentence ids must align") {
  std::string gold =
      R"({"id":"s1","template":"{np:1}","gold":"[[1:a dog]]","nps":[{"id":1,"head_ja":"inu"}]})"
      "\n";
  std::string hyp = R"({"id":"s2","nps":[{"id":1,"text":"a dog"}]})"
                    "\n";
  CHECK_THROWS_AS(score_hypotheses(parse_hypotheses(hyp), gold), BadIdError);

  std::string hyp_missing_np = R"({"id":"s1","nps":[]})"
                               "\n";
  CHECK_THROWS_AS(score_hypotheses(parse_hypotheses(hyp_missing_np), gold), BadIdError);
}

TEST_CASE("report renders the accuracy table") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document_file(showcase_path());
  std::string hyp = format_translation_output(translate_corpus(doc, lex));
  ScoreReport report = score_hypotheses(parse_hypotheses(hyp), read_file(showcase_path()));
  std::string table = format_score_report(report);
  CHECK(table.find("NPs") != std::string::npos);
  CHECK(table.find("Sentences") != std::string::npos);
  CHECK(table.find("(8)") != std::string::npos);
  CHECK(table.find("(4)") != std::string::npos);
  CHECK(table.find("100%") != std::string::npos);

  ScoreOptions options;
  options.per_sentence = true;
  options.breakdown = true;
  table = format_score_report(report, options);
  CHECK(table.find("per sentence:") != std::string::npos);
  CHECK(table.find("ex3  3/3  ok") != std::string::npos);
  CHECK(table.find("error breakdown (extension") != std::string::npos);
}

TEST_CASE("breakdown categorizes article, number, and classifier slips") {
  std::string gold =
      R"({"id":"s1","template":"{np:1} {np:2} {np:3}","gold":"[[1:a dog]] [[2:two cats]] [[3:a piece of equipment]]","nps":[{"id":1,"head_ja":"inu"},{"id":2,"head_ja":"neko"},{"id":3,"head_ja":"dougu"}]})"
      "\n";
  std::string hyp =
      R"({"id":"s1","nps":[{"id":1,"text":"dog"},{"id":2,"text":"two cat"},{"id":3,"text":"equipment"}]})"
      "\n";
  ScoreReport report = score_hypotheses(parse_hypotheses(hyp), gold);
  ScoreOptions options;
  options.breakdown = true;
  std::string table = format_score_report(report, options);
  CHECK(table.find("article: 1") != std::string::npos);
  CHECK(table.find("number: 1") != std::string::npos);
  CHECK(table.find("classifier: 1") != std::string::npos);
}

TEST_CASE("flipping any single correct verdict never raises sentence accuracy") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    int sentences = 1 + static_cast<int>(rng() % 5);
    ScoreReport base;
    std::vector<std::vector<bool>> verdicts;
    for (int s = 0; s < sentences; ++s) {
      int nps = 1 + static_cast<int>(rng() % 4);
      std::vector<bool> v;
      for (int n = 0; n < nps; ++n) v.push_back(rng() % 2 == 0);
      verdicts.push_back(v);
    }
    auto accuracy = [](const std::vector<std::vector<bool>>& all) {
      std::size_t correct = 0;
      for (const auto& s : all) {
        bool ok = true;
        for (bool v : s) ok = ok && v;
        if (ok) ++correct;
      }
      return static_cast<double>(correct) / static_cast<double>(all.size());
    };
    double before = accuracy(verdicts);
    // flip one correct verdict to incorrect
    for (auto& s : verdicts) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) {
          s[i] = false;
          goto flipped;
        }
      }
    }
  flipped:
    double after = accuracy(verdicts);
    CHECK(after <= before + 1e-12);
  }
}
