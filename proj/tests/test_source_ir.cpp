#include <doctest.h>

#include "errors.hpp"
#include "generators.hpp"
#include "lexicon.hpp"
#include "source_ir.hpp"

using namespace npgen;

namespace {

Lexicon bundled() { return load_lexicon_dir(std::string(NPGEN_DATA_DIR) + "/lexicon"); }

}  // namespace

TEST_CASE("parses a one-NP sentence record") {
  std::string record =
      R"({"id":"ex2","main_verb_ja":"zetumetu","template":"{np:1} died out",)"
      R"("nps":[{"id":1,"head_ja":"manmosu","syntactic_role":"SUBJECT"}]})"
      "\n";
  std::vector<SentenceIR> doc = parse_document(record);
  REQUIRE(doc.size() == 1);
  const SentenceIR& s = doc[0];
  CHECK(s.id == "ex2");
  CHECK(s.main_verb_ja == "zetumetu");
  REQUIRE(s.nps.size() == 1);
  CHECK(s.nps[0].head_ja == "manmosu");
  CHECK(s.nps[0].syntactic_role == SyntacticRole::Subject);
  CHECK(s.template_text == "{np:1} died out");
}

TEST_CASE("empty stream parses to an empty document") {
  CHECK(parse_document("").empty());
  CHECK(parse_document("# only a comment\n\n").empty());
}

TEST_CASE("cardinal without classifier is a parse-time invariant error") {
  std::string record =
      R"({"id":"s1","template":"{np:1}","nps":[{"id":1,"head_ja":"inu","cardinal":2}]})";
  CHECK_THROWS_AS(parse_document(record), ParseError);
}

TEST_CASE("dangling references are parse errors") {
  CHECK_THROWS_AS(
      parse_document(
          R"({"id":"s1","template":"{np:1}","nps":[{"id":1,"head_ja":"inu","syntactic_role":"APPOSITIVE_TO","appositive_to":9}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(
          R"({"id":"s1","template":"{np:1}","nps":[{"id":1,"head_ja":"inu","purpose_target_of":7}]})"),
      ParseError);
  CHECK_THROWS_AS(parse_document(R"({"id":"s1","template":"{np:9}","nps":[{"id":1,"head_ja":"inu"}]})"),
                  ParseError);
}

TEST_CASE("template placeholder constraints") {
  // an NP id may appear at most once as a placeholder
  CHECK_THROWS_AS(
      parse_document(R"({"id":"s1","template":"{np:1} {np:1}","nps":[{"id":1,"head_ja":"inu"}]})"),
      ParseError);
  // list members count as placeholders
  CHECK_THROWS_AS(
      parse_document(
          R"({"id":"s1","template":"{list:1,1}","nps":[{"id":1,"head_ja":"inu"}]})"),
      ParseError);
  // agreement slots may repeat and may reference any existing np
  std::vector<SentenceIR> ok = parse_document(
      R"({"id":"s1","template":"{np:1} {be:1} {be:1}","nps":[{"id":1,"head_ja":"inu"}]})");
  CHECK(ok.size() == 1);
}

TEST_CASE("two subjects are rejected") {
  CHECK_THROWS_AS(
      parse_document(
          R"({"id":"s1","template":"{np:1} {np:2}","nps":[{"id":1,"head_ja":"inu","syntactic_role":"SUBJECT"},{"id":2,"head_ja":"neko","syntactic_role":"SUBJECT"}]})"),
      ParseError);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_document("\n\n{bad json\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("duplicate sentence ids are rejected") {
  std::string two =
      R"({"id":"s1","template":"x","nps":[]})"
      "\n"
      R"({"id":"s1","template":"y","nps":[]})"
      "\n";
  CHECK_THROWS_AS(parse_document(two), ParseError);
}

TEST_CASE("validation reports unknown lemmas as diagnostics") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document(
      R"({"id":"s1","main_verb_ja":"da","template":"{np:1}","nps":[{"id":1,"head_ja":"inu","determiner_ja":"taitei-no"}]})");
  CHECK(validate_against_lexicon(doc[0], lex).empty());

  doc = parse_document(
      R"({"id":"s2","main_verb_ja":"da","template":"{np:1}","nps":[{"id":1,"head_ja":"zzz"}]})");
  std::vector<Diagnostic> diags = validate_against_lexicon(doc[0], lex);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == "unknown_noun");
  CHECK(diags[0].detail == "zzz");
  CHECK(diags[0].np_id == 1);

  doc = parse_document(
      R"({"id":"s3","main_verb_ja":"da","template":"{np:1}","nps":[{"id":1,"head_ja":"inu","determiner_ja":"zzz-det"}]})");
  diags = validate_against_lexicon(doc[0], lex);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == "unknown_modifier");
  CHECK(diags[0].detail == "zzz-det");
}

TEST_CASE("validation flags ascriptive NPs without a subject") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document(
      R"({"id":"s1","main_verb_ja":"da","template":"{np:1}","nps":[{"id":1,"head_ja":"dougu","syntactic_role":"COPULA_COMPLEMENT"}]})");
  std::vector<Diagnostic> diags = validate_against_lexicon(doc[0], lex);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == "missing_subject");
}

TEST_CASE("validation flags appositive cycles") {
  Lexicon lex = bundled();
  std::vector<SentenceIR> doc = parse_document(
      R"({"id":"s1","template":"{np:1} {np:2}","nps":[)"
      R"({"id":1,"head_ja":"inu","syntactic_role":"APPOSITIVE_TO","appositive_to":2},)"
      R"({"id":2,"head_ja":"neko","syntactic_role":"APPOSITIVE_TO","appositive_to":1}]})");
  std::vector<Diagnostic> diags = validate_against_lexicon(doc[0], lex);
  REQUIRE(!diags.empty());
  CHECK(diags[0].kind == "appositive_cycle");
}

TEST_CASE("parse-serialize-parse is the identity on sentence values") {
  Lexicon lex = bundled();
  testgen::Rng rng(20240801);
  for (int i = 0; i < 300; ++i) {
    SentenceIR s = testgen::random_sentence(rng, lex, i);
    std::vector<SentenceIR> reparsed = parse_document(serialize_sentence(s) + "\n");
    REQUIRE(reparsed.size() == 1);
    CHECK(reparsed[0] == s);
  }
}

TEST_CASE("gold region extraction") {
  GoldSentence g = parse_gold_regions("There are [[1:3 pieces of tofu]] and [[3:2 knives]]");
  CHECK(g.plain == "There are 3 pieces of tofu and 2 knives");
  REQUIRE(g.regions.size() == 2);
  CHECK(g.regions[0].np_id == 1);
  CHECK(g.regions[0].text == "3 pieces of tofu");
  CHECK(g.regions[1].np_id == 3);
  CHECK(g.regions[1].text == "2 knives");
  CHECK_THROWS_AS(parse_gold_regions("bad [[1 no close"), ParseError);
}
