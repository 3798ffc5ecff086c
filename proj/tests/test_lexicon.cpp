#include <doctest.h>

#include "errors.hpp"
#include "lexicon.hpp"

using namespace npgen;

namespace {

Lexicon bundled() { return load_lexicon_dir(std::string(NPGEN_DATA_DIR) + "/lexicon"); }

const char* kTinyHierarchy = "ROOT\t-\nANIMAL\tROOT\nARTIFACT\tROOT\n";

Lexicon tiny_with_nouns(const std::string& nouns_tsv) {
  return load_lexicon_from_strings(nouns_tsv, "", "", "", kTinyHierarchy);
}

}  // namespace

TEST_CASE("bundled lexicon carries the dictionary rows") {
  Lexicon lex = bundled();

  const NounEntry& knife = lex.noun("houchou");
  CHECK(knife.en_lemma == "knife");
  CHECK(knife.ncp.major == MajorNcp::FullyCountable);
  CHECK(knife.default_number == Number::Singular);
  CHECK(!knife.default_classifier);
  CHECK(knife.irregular_plural == "knives");

  const NounEntry& noodles = lex.noun("men");
  CHECK(noodles.ncp.major == MajorNcp::FullyCountable);
  CHECK(noodles.default_number == Number::Plural);

  const NounEntry& group = lex.noun("mure");
  CHECK(group.ncp.major == MajorNcp::FullyCountable);
  CHECK(group.ncp.collective);

  const NounEntry& furniture = lex.noun("kagu");
  CHECK(furniture.ncp.major == MajorNcp::Uncountable);
  CHECK(furniture.default_classifier == "piece");

  const NounEntry& knowledge = lex.noun("chishiki");
  CHECK(knowledge.ncp.major == MajorNcp::Uncountable);
  CHECK(knowledge.ncp.semi_countable);

  const NounEntry& scissors = lex.noun("hasami");
  CHECK(scissors.en_lemma == "scissors");
  CHECK(scissors.ncp.major == MajorNcp::PluraliaTantum);
  CHECK(scissors.ncp.pt_pair);
  CHECK(scissors.default_classifier == "pair");
  CHECK(scissors.default_number == Number::Plural);

  const NounEntry& clothes = lex.noun("ifuku");
  CHECK(clothes.ncp.major == MajorNcp::PluraliaTantum);
  CHECK(!clothes.ncp.pt_pair);
  CHECK(!clothes.default_classifier);
  CHECK(clothes.default_number == Number::Plural);
  CHECK(clothes.denumeration_substitute == "garment");
}

TEST_CASE("unknown lemma lookups carry the lemma") {
  Lexicon lex = bundled();
  CHECK(lex.find_noun("zzz-unknown") == nullptr);
  try {
    lex.noun("zzz-unknown");
    FAIL("expected UnknownLemmaError");
  } catch (const UnknownLemmaError& e) {
    CHECK(e.lemma() == "zzz-unknown");
    CHECK(std::string(e.what()).find("zzz-unknown") != std::string::npos);
  }
}

TEST_CASE("uncountable entry without classifier is rejected by name") {
  std::string nouns = "bad-entry\tstuff\tuncountable\tsingular\t-\t-\tARTIFACT\t-\n";
  try {
    tiny_with_nouns(nouns);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("bad-entry") != std::string::npos);
  }
}

TEST_CASE("minor class and number constraints are enforced") {
  CHECK_THROWS_AS(tiny_with_nouns("x\ty\tuncountable.semi_countable\tplural\tpiece\t-\tARTIFACT\t-\n"),
                  ValidationError);  // plural default on uncountable
  CHECK_THROWS_AS(tiny_with_nouns("x\ty\tpluralia_tantum.pair\tsingular\tpair\t-\tARTIFACT\t-\n"),
                  ValidationError);  // pluralia tanta must be plural
  CHECK_THROWS_AS(tiny_with_nouns("x\ty\tweakly_countable\tplural\t-\t-\tARTIFACT\t-\n"),
                  ValidationError);  // weakly countable cannot default plural
  CHECK_THROWS_AS(tiny_with_nouns("x\ty\tfully_countable\tsingular\t-\t-\tNOWHERE\t-\n"),
                  ValidationError);  // category must exist
}

TEST_CASE("empty noun file loads as an empty, valid lexicon") {
  Lexicon lex = load_lexicon_from_strings("", "", "", "", kTinyHierarchy);
  CHECK(lex.nouns().empty());
  CHECK(lex.verbs().empty());
}

TEST_CASE("parse errors name the file and line") {
  try {
    load_lexicon_from_strings("one\tfield-short\tfully_countable\tsingular\t-\t-\tANIMAL\n", "",
                              "", "", kTinyHierarchy);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("nouns.tsv:1") != std::string::npos);
  }
}

TEST_CASE("verb flag conflicts are rejected") {
  CHECK_THROWS_AS(load_lexicon_from_strings("", "v\tverb\tgeneric_subject,copula\n", "", "",
                                            kTinyHierarchy),
                  ValidationError);
}

TEST_CASE("modifier with uncountable form must force mass uncountable") {
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "m\tmany\tmuch\tdenumerated\tplural\t-\n",
                                            "", kTinyHierarchy),
                  ValidationError);
  // and a denumerated forcing entry needs a number
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "m\teach\t-\tdenumerated\t-\t-\n", "",
                                            kTinyHierarchy),
                  ValidationError);
}

TEST_CASE("classifier override must state complement behavior") {
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "", "kire\tslice\tsingular_unless_pt\t-\n",
                                            kTinyHierarchy),
                  ValidationError);
}

TEST_CASE("subsumption follows the category tree") {
  Lexicon lex = bundled();
  const SemanticHierarchy& h = lex.hierarchy();
  CHECK(h.is_subsumed("ANIMAL", "ANIMAL"));
  CHECK(h.is_subsumed("ANIMAL", "ROOT"));
  CHECK(!h.is_subsumed("ANIMAL", "ARTIFACT"));
  CHECK(h.is_subsumed("DOG", "ANIMAL"));
  CHECK(h.is_subsumed("DOG", "ANIMATE"));
  CHECK(!h.is_subsumed("ANIMAL", "DOG"));
  CHECK_THROWS_AS(h.is_subsumed("ANIMAL", "NOWHERE"), BadIdError);
}

TEST_CASE("subsumption is reflexive, transitive, antisymmetric over the bundled tree") {
  Lexicon lex = bundled();
  const SemanticHierarchy& h = lex.hierarchy();
  const auto& cats = h.categories();
  for (const auto& a : cats) {
    CHECK(h.is_subsumed(a, a));
  }
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      if (a != b && h.is_subsumed(a, b)) {
        CHECK(!h.is_subsumed(b, a));
        for (const auto& c : cats) {
          if (h.is_subsumed(b, c)) CHECK(h.is_subsumed(a, c));
        }
      }
    }
  }
}

TEST_CASE("hierarchy structural errors") {
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "", "", "A\t-\nB\t-\n"), ValidationError);
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "", "", "A\tB\nB\tA\n"), ValidationError);
  CHECK_THROWS_AS(load_lexicon_from_strings("", "", "", "", "ROOT\t-\nA\tMISSING\n"),
                  ValidationError);
}

TEST_CASE("load, serialize, reload round-trips the bundled lexicon") {
  Lexicon lex = bundled();
  Lexicon again = load_lexicon_from_strings(
      serialize_nouns(lex), serialize_verbs(lex), serialize_modifiers(lex),
      serialize_classifiers(lex), serialize_hierarchy(lex), serialize_an_exceptions(lex));
  CHECK(lex == again);
}

TEST_CASE("repeated lookups are identical") {
  Lexicon lex = bundled();
  const NounEntry& a = lex.noun("inu");
  const NounEntry& b = lex.noun("inu");
  CHECK(&a == &b);
  CHECK(a == b);
}

TEST_CASE("duplicate noun entries are rejected") {
  std::string nouns =
      "inu\tdog\tfully_countable\tsingular\t-\t-\tANIMAL\t-\n"
      "inu\thound\tfully_countable\tsingular\t-\t-\tANIMAL\t-\n";
  CHECK_THROWS_AS(tiny_with_nouns(nouns), ValidationError);
}
