#include <doctest.h>

#include "errors.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"

using namespace npgen;

namespace {

Lexicon bundled() { return load_lexicon_dir(std::string(NPGEN_DATA_DIR) + "/lexicon"); }

std::vector<SentenceIR> showcase() {
  return parse_document_file(std::string(NPGEN_DATA_DIR) + "/corpora/showcase.npir");
}

}  // namespace

TEST_CASE("the showcase corpus translates to the expected strings") {
  Lexicon lex = bundled();
  std::vector<TranslatedSentence> results = translate_corpus(showcase(), lex);
  REQUIRE(results.size() == 4);
  CHECK(results[0].rendered.text == "Most children become adults");
  CHECK(results[1].rendered.text == "Mammoths died out");
  CHECK(results[2].rendered.text == "There are 3 pieces of tofu, 1 pair of scissors and 2 knives");
  CHECK(results[3].rendered.text == "That is a piece of equipment");
  for (const TranslatedSentence& r : results) CHECK(r.translated);
}

TEST_CASE("translation output stream carries records plus a footer") {
  Lexicon lex = bundled();
  std::string out = format_translation_output(translate_corpus(showcase(), lex));
  CHECK(out.find("\"id\":\"ex1\"") != std::string::npos);
  CHECK(out.find("Most children become adults") != std::string::npos);
  CHECK(out.find("# sentences: 4 translated: 4 diagnostics: 0") != std::string::npos);
}

TEST_CASE("empty corpus yields only the footer") {
  Lexicon lex = bundled();
  std::string out = format_translation_output(translate_corpus({}, lex));
  CHECK(out == "# sentences: 0 translated: 0 diagnostics: 0\n");
}

TEST_CASE("unknown lemmas become diagnostics, not failures") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document(
      R"({"id":"s1","main_verb_ja":"da","template":"{np:1}","nps":[{"id":1,"head_ja":"zzz"}]})");
  std::vector<TranslatedSentence> results = translate_corpus(doc, lex);
  REQUIRE(results.size() == 1);
  CHECK(!results[0].translated);
  REQUIRE(results[0].diagnostics.size() == 1);
  CHECK(results[0].diagnostics[0].detail == "zzz");
  std::string out = format_translation_output(results);
  CHECK(out.find("\"diagnostics\"") != std::string::npos);
  CHECK(out.find("# sentences: 1 translated: 0 diagnostics: 1") != std::string::npos);
}

TEST_CASE("translation output is deterministic") {
  Lexicon lex = bundled();
  std::string a = format_translation_output(translate_corpus(showcase(), lex));
  std::string b = format_translation_output(translate_corpus(showcase(), lex));
  CHECK(a == b);
}

TEST_CASE("trace lists the fired rules and the final string") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = showcase();

  std::string t = trace_np(doc, lex, "ex2", 1);
  CHECK(t.find("test 2/8") != std::string::npos);
  CHECK(t.find("generic") != std::string::npos);
  CHECK(t.find("output: mammoths") != std::string::npos);

  t = trace_np(doc, lex, "ex4", 2);
  CHECK(t.find("test 6/8") != std::string::npos);
  CHECK(t.find("ascriptive") != std::string::npos);
  CHECK(t.find("step 5/7") != std::string::npos);
  CHECK(t.find("uncountable x denumerated") != std::string::npos);
  CHECK(t.find("classifier: piece") != std::string::npos);
  CHECK(t.find("output: a piece of equipment") != std::string::npos);
}

TEST_CASE("trace on a missing np names the id") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = showcase();
  try {
    trace_np(doc, lex, "ex2", 99);
    FAIL("expected BadIdError");
  } catch (const BadIdError& e) {
    CHECK(std::string(e.what()).find("99") != std::string::npos);
  }
  CHECK_THROWS_AS(trace_np(doc, lex, "nope", 1), BadIdError);
}
