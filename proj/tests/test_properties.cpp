#include <doctest.h>

#include <chrono>

#include "generators.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"
#include "realizer.hpp"
#include "scoring.hpp"

using namespace npgen;

namespace {

Lexicon bundled() { return load_lexicon_dir(std::string(NPGEN_DATA_DIR) + "/lexicon"); }

}  // namespace

TEST_CASE("generated corpora uphold the plan and rendering invariants") {
  Lexicon lex = bundled();
  testgen::Rng rng(424242);
  auto started = std::chrono::steady_clock::now();

  int sentences = 0;
  int generic_seen = 0;
  int wrapped_seen = 0;
  int count1_seen = 0;
  for (int i = 0; i < 1200; ++i) {
    SentenceIR s = testgen::random_sentence(rng, lex, i);
    // every generated lemma is in the lexicon, so the sentence must be clean
    REQUIRE(validate_against_lexicon(s, lex).empty());
    std::vector<RealizationPlan> plans = resolve_sentence(s, lex);
    RenderedSentence rendered = render_sentence(s, plans, lex);
    ++sentences;

    std::unordered_map<int, const NPNode*> np_by_id;
    for (const NPNode& np : s.nps) np_by_id.emplace(np.id, &np);

    for (const RealizationPlan& plan : plans) {
      // generic plans are bare: no article, no denumerator, no classifier phrase
      if (plan.referentiality.kind == ReferentialityKind::Generic) {
        ++generic_seen;
        REQUIRE(plan.article == Article::None);
        REQUIRE(!plan.denumerator_token);
        REQUIRE(!plan.classifier_complement);
        REQUIRE(!plan.environment);
      } else {
        REQUIRE(plan.environment);
      }
      // a/an implies singular head
      if (plan.article == Article::AAn) REQUIRE(plan.head_number == Number::Singular);
      // classifier complements belong to classifier heads and never carry articles
      if (plan.classifier_complement) {
        ++wrapped_seen;
        std::string text = render_np(plan, lex).text;
        std::size_t of = text.find(" of ");
        REQUIRE(of != std::string::npos);
        std::string complement = text.substr(of + 4);
        REQUIRE(complement.rfind("a ", 0) != 0);
        REQUIRE(complement.rfind("an ", 0) != 0);
        REQUIRE(complement.rfind("the ", 0) != 0);
        REQUIRE(complement.rfind("some ", 0) != 0);
      }
      if (plan.environment && plan.environment->count) {
        int count = *plan.environment->count;
        if (count == 1) {
          ++count1_seen;
          // the count inflects the head: one of anything stays singular
          REQUIRE(plan.head_number == Number::Singular);
        } else {
          REQUIRE(plan.article != Article::AAn);
          REQUIRE(plan.head_number == Number::Plural);
        }
      }
      // ascriptive number agreement with a countable complement head
      if (plan.referentiality.kind == ReferentialityKind::Ascriptive &&
          plan.environment->fired_step == 5 &&
          plan.environment->kind == EnvironmentKind::Denumerated) {
        const NPNode& np = *np_by_id.at(plan.np_id);
        const RealizationPlan* anchor = nullptr;
        if (np.syntactic_role == SyntacticRole::AppositiveTo) {
          for (const RealizationPlan& p : plans) {
            if (p.np_id == *np.appositive_to) anchor = &p;
          }
        } else {
          for (std::size_t k = 0; k < s.nps.size(); ++k) {
            if (s.nps[k].syntactic_role == SyntacticRole::Subject) anchor = &plans[k];
          }
        }
        REQUIRE(anchor != nullptr);
        REQUIRE(plan.environment->number == anchor->head_number);
      }
    }

    // agreement slots match the referenced plan in the rendered text; the
    // generated template puts {be:1} at the very end when present
    if (s.template_text.find("{be:1}") != std::string::npos) {
      const RealizationPlan* first = nullptr;
      for (const RealizationPlan& p : plans) {
        if (p.np_id == 1) first = &p;
      }
      REQUIRE(first != nullptr);
      std::string want = first->head_number == Number::Plural ? "are" : "is";
      REQUIRE(rendered.text.size() >= want.size());
      REQUIRE(rendered.text.compare(rendered.text.size() - want.size(), want.size(), want) == 0);
    }
  }
  REQUIRE(sentences == 1200);
  // the generator actually exercised the interesting paths
  CHECK(generic_seen > 50);
  CHECK(wrapped_seen > 100);
  CHECK(count1_seen > 50);

  auto elapsed = std::chrono::steady_clock::now() - started;
  CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 30);
}

TEST_CASE("serialization round-trips hold under random sentences") {
  Lexicon lex = bundled();
  testgen::Rng rng(99);
  std::vector<SentenceIR> doc;
  for (int i = 0; i < 1000; ++i) doc.push_back(testgen::random_sentence(rng, lex, i));
  std::vector<SentenceIR> again = parse_document(serialize_document(doc));
  REQUIRE(again.size() == doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) REQUIRE(doc[i] == again[i]);

  // and the lexicon round-trip stays the identity
  Lexicon reloaded = load_lexicon_from_strings(
      serialize_nouns(lex), serialize_verbs(lex), serialize_modifiers(lex),
      serialize_classifiers(lex), serialize_hierarchy(lex), serialize_an_exceptions(lex));
  REQUIRE(lex == reloaded);
}

// Micro-averaged NP accuracy can dip below sentence accuracy when NP counts
// vary per sentence, so the inequality is asserted where it is a theorem:
// corpora whose sentences share one NP count (the shape the headline results
// table uses, two NPs per sentence).
TEST_CASE("sentence accuracy never exceeds NP accuracy on uniform corpora") {
  Lexicon lex = bundled();
  testgen::Rng rng(31337);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + rng.below(8);
    int nps = 1 + rng.below(3);
    std::string gold_text;
    std::string hyp_text;
    for (int i = 0; i < n; ++i) {
      std::string gold_regions;
      std::string hyp_nps;
      for (int k = 1; k <= nps; ++k) {
        std::string right = "np" + std::to_string(k);
        bool correct = rng.chance(0.7);
        std::string got = correct ? right : right + "-wrong";
        if (k > 1) {
          gold_regions += " ";
          hyp_nps += ",";
        }
        gold_regions += "[[" + std::to_string(k) + ":" + right + "]]";
        hyp_nps += "{\"id\":" + std::to_string(k) + ",\"text\":\"" + got + "\"}";
      }
      std::string id = "s" + std::to_string(i);
      std::string placeholders;
      for (int k = 1; k <= nps; ++k) {
        if (k > 1) placeholders += " ";
        placeholders += "{np:" + std::to_string(k) + "}";
      }
      std::string np_decl;
      for (int k = 1; k <= nps; ++k) {
        if (k > 1) np_decl += ",";
        np_decl += "{\"id\":" + std::to_string(k) + ",\"head_ja\":\"inu\"}";
      }
      gold_text += "{\"id\":\"" + id + "\",\"template\":\"" + placeholders + "\",\"gold\":\"" +
                   gold_regions + "\",\"nps\":[" + np_decl + "]}\n";
      hyp_text += "{\"id\":\"" + id + "\",\"nps\":[" + hyp_nps + "]}\n";
    }
    ScoreReport report = score_hypotheses(parse_hypotheses(hyp_text), gold_text);
    REQUIRE(report.sentence_accuracy <= report.np_accuracy + 1e-12);
  }
}

TEST_CASE("clean validation means clean translation") {
  Lexicon lex = bundled();
  testgen::Rng rng(555);
  for (int i = 0; i < 500; ++i) {
    SentenceIR s = testgen::random_sentence(rng, lex, i);
    if (!validate_against_lexicon(s, lex).empty()) continue;
    CHECK_NOTHROW(resolve_sentence(s, lex));
  }
}
