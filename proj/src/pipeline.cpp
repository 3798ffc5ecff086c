#include "pipeline.hpp"

#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace npgen {

using nlohmann::json;

std::vector<TranslatedSentence> translate_corpus(const std::vector<SentenceIR>& sentences,
                                                 const Lexicon& lexicon,
                                                 const PlanOptions& options) {
  std::vector<TranslatedSentence> results;
  results.reserve(sentences.size());
  for (const SentenceIR& sentence : sentences) {
    TranslatedSentence out;
    out.id = sentence.id;
    out.diagnostics = validate_against_lexicon(sentence, lexicon);
    if (out.diagnostics.empty()) {
      out.plans = resolve_sentence(sentence, lexicon, options);
      out.rendered = render_sentence(sentence, out.plans, lexicon, options);
      out.translated = true;
    }
    results.push_back(std::move(out));
  }
  return results;
}

std::string format_translation_output(const std::vector<TranslatedSentence>& results) {
  std::string out;
  std::size_t translated = 0;
  std::size_t with_diagnostics = 0;
  for (const TranslatedSentence& r : results) {
    json j;
    j["id"] = r.id;
    if (r.translated) {
      ++translated;
      j["translation"] = r.rendered.text;
      json nps = json::array();
      for (const RenderedRegion& region : r.rendered.regions) {
        const RealizationPlan* plan = nullptr;
        for (const RealizationPlan& p : r.plans) {
          if (p.np_id == region.np_id) plan = &p;
        }
        json jn;
        jn["id"] = region.np_id;
        jn["text"] = region.text;
        if (plan) {
          jn["referentiality"] = to_string(plan->referentiality.kind);
          jn["fired_test"] = plan->referentiality.fired_test;
          jn["number"] = to_string(plan->head_number);
          jn["article"] = to_string(plan->article);
          if (plan->environment) {
            jn["environment"] = to_string(plan->environment->kind);
            jn["fired_step"] = plan->environment->fired_step;
          }
          jn["trace"] = plan->trace;
        }
        nps.push_back(std::move(jn));
      }
      j["nps"] = std::move(nps);
    } else {
      ++with_diagnostics;
      json dl = json::array();
      for (const Diagnostic& d : r.diagnostics) {
        json jd;
        jd["kind"] = d.kind;
        jd["detail"] = d.detail;
        if (d.np_id) jd["np"] = *d.np_id;
        dl.push_back(std::move(jd));
      }
      j["diagnostics"] = std::move(dl);
    }
    out += j.dump();
    out += '\n';
  }
  out += "# sentences: " + std::to_string(results.size()) +
         " translated: " + std::to_string(translated) +
         " diagnostics: " + std::to_string(with_diagnostics) + "\n";
  return out;
}

std::string trace_np(const std::vector<SentenceIR>& sentences, const Lexicon& lexicon,
                     const std::string& sentence_id, int np_id, const PlanOptions& options) {
  const SentenceIR* sentence = nullptr;
  for (const SentenceIR& s : sentences) {
    if (s.id == sentence_id) sentence = &s;
  }
  if (!sentence) throw BadIdError("no sentence with id '" + sentence_id + "'");
  const NPNode* np = sentence->find_np(np_id);
  if (!np) {
    throw BadIdError("sentence '" + sentence_id + "' has no np " + std::to_string(np_id));
  }

  std::vector<Diagnostic> diags = validate_against_lexicon(*sentence, lexicon);
  if (!diags.empty()) {
    std::ostringstream out;
    out << "sentence '" << sentence_id << "' is not translatable:\n";
    for (const Diagnostic& d : diags) {
      out << "  " << d.kind << ": " << d.detail;
      if (d.np_id) out << " (np " << *d.np_id << ")";
      out << "\n";
    }
    return out.str();
  }

  std::vector<RealizationPlan> plans = resolve_sentence(*sentence, lexicon, options);
  const RealizationPlan* plan = nullptr;
  for (const RealizationPlan& p : plans) {
    if (p.np_id == np_id) plan = &p;
  }
  if (!plan) throw BadIdError("no plan for np " + std::to_string(np_id));

  const NounEntry& entry = lexicon.noun(np->head_ja);
  std::ostringstream out;
  out << "sentence " << sentence_id << ", np " << np_id << " (" << np->head_ja << " -> "
      << entry.en_lemma << ", " << to_string(entry.ncp.major) << ")\n";
  out << "  referentiality: test " << plan->referentiality.fired_test << "/8 ("
      << referentiality_test_name(plan->referentiality.fired_test) << ") -> "
      << to_string(plan->referentiality.kind) << "\n";
  if (plan->referentiality.kind == ReferentialityKind::Generic) {
    out << "  number: bare generic noun phrase, " << to_string(plan->head_number) << "\n";
  } else if (plan->environment) {
    const Environment& env = *plan->environment;
    out << "  environment: step " << env.fired_step << "/7 ("
        << environment_step_name(env.fired_step) << ") -> " << to_string(env.kind);
    if (env.count) out << ", count " << *env.count;
    if (env.number) out << ", " << to_string(*env.number);
    out << "\n";
    out << "  realization: " << to_string(entry.ncp.major) << " x " << to_string(env.kind);
    if (env.kind == EnvironmentKind::Denumerated && env.number) {
      out << " (" << to_string(*env.number) << ")";
    }
    out << "\n";
  }
  if (plan->classifier_complement) {
    out << "  classifier: " << plan->surface_head << " (complement '"
        << plan->classifier_complement->surface << "', "
        << to_string(plan->classifier_complement->number) << ", no article)\n";
  }
  out << "  article: " << to_string(plan->article);
  if (plan->denumerator_token) out << ", denumerator '" << *plan->denumerator_token << "'";
  out << "\n";
  out << "  rules:";
  for (const std::string& t : plan->trace) out << " " << t;
  out << "\n";
  out << "  output: " << render_np(*plan, lexicon).text << "\n";
  return out.str();
}

}  // namespace npgen
