#include "realizer.hpp"

#include <cctype>
#include <unordered_map>

#include "errors.hpp"
#include "template_text.hpp"

namespace npgen {
namespace {

bool is_vowel_letter(char c) {
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool starts_with_prefix(const std::string& word, const std::string& prefix) {
  if (word.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(word[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string pluralize(const std::string& lemma, const std::optional<std::string>& irregular) {
  if (irregular) return *irregular;
  if (lemma.empty()) return lemma;
  auto ends_with = [&lemma](const char* suffix) {
    std::string_view s(suffix);
    return lemma.size() >= s.size() && lemma.compare(lemma.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") || ends_with("sh")) {
    return lemma + "es";
  }
  if (lemma.size() >= 2 && lemma.back() == 'y' && !is_vowel_letter(lemma[lemma.size() - 2])) {
    return lemma.substr(0, lemma.size() - 1) + "ies";
  }
  return lemma + "s";
}

const std::vector<std::string>& default_an_exceptions() {
  static const std::vector<std::string> words = {
      "hour", "honest", "honor", "honour", "heir",
      "one",  "once",   "use",  "unit",  "unique",
      "uniform", "university", "user", "usual", "euro", "european",
  };
  return words;
}

std::string article_surface(Article article, const std::string& following_word,
                            const std::vector<std::string>& an_exceptions) {
  switch (article) {
    case Article::The: return "the";
    case Article::Some: return "some";
    case Article::None: return "";
    case Article::AAn: break;
  }
  bool an = !following_word.empty() && is_vowel_letter(following_word[0]);
  for (const std::string& prefix : an_exceptions) {
    if (starts_with_prefix(following_word, prefix)) {
      an = !an;
      break;
    }
  }
  return an ? "an" : "a";
}

std::string article_surface(Article article, const std::string& following_word) {
  return article_surface(article, following_word, default_an_exceptions());
}

std::string cardinal_words(int n) {
  static const char* ones[] = {"zero", "one", "two",  "three", "four",  "five",  "six",
                               "seven", "eight", "nine", "ten",  "eleven", "twelve",
                               "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
                               "eighteen", "nineteen", "twenty"};
  static const char* tens[] = {"",      "",      "twenty", "thirty", "forty",
                               "fifty", "sixty", "seventy", "eighty", "ninety"};
  if (n >= 0 && n <= 20) return ones[n];
  if (n < 100) {
    std::string word = tens[n / 10];
    if (n % 10) word += std::string("-") + ones[n % 10];
    return word;
  }
  return std::to_string(n);
}

SurfaceNP render_np(const RealizationPlan& plan, const Lexicon& lexicon) {
  const std::vector<std::string>& exceptions =
      lexicon.an_exceptions().empty() ? default_an_exceptions() : lexicon.an_exceptions();

  std::string head = plan.head_number == Number::Plural
                         ? pluralize(plan.surface_head, plan.head_irregular_plural)
                         : plan.surface_head;

  std::string text;
  std::string following = plan.denumerator_token ? *plan.denumerator_token : head;
  std::string article = article_surface(plan.article, following, exceptions);
  if (!article.empty()) text += article;
  if (plan.denumerator_token) {
    if (!text.empty()) text += ' ';
    text += *plan.denumerator_token;
  }
  if (!text.empty()) text += ' ';
  text += head;
  if (plan.classifier_complement) {
    text += " of ";
    text += plan.classifier_complement->surface;
  }
  if (plan.postmodifier) {
    text += ' ';
    text += *plan.postmodifier;
  }
  return {text, plan.np_id};
}

RenderedSentence render_sentence(const SentenceIR& sentence,
                                 const std::vector<RealizationPlan>& plans,
                                 const Lexicon& lexicon, const PlanOptions& options) {
  std::unordered_map<int, const RealizationPlan*> by_id;
  for (const RealizationPlan& plan : plans) by_id.emplace(plan.np_id, &plan);

  auto plan_for = [&](int id) -> const RealizationPlan& {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw BadIdError("sentence '" + sentence.id + "': no plan for placeholder np " +
                       std::to_string(id));
    }
    return *it->second;
  };

  TemplateParts parts = parse_template(sentence.template_text, "sentence '" + sentence.id + "'");
  RenderedSentence out;
  auto append_np = [&](int id) {
    SurfaceNP np = render_np(plan_for(id), lexicon);
    RenderedRegion region;
    region.np_id = id;
    region.start = out.text.size();
    region.length = np.text.size();
    out.text += np.text;
    out.regions.push_back(std::move(region));
  };

  for (const TemplateSegment& seg : parts.segments) {
    switch (seg.kind) {
      case TemplateSegment::Kind::Text:
        out.text += seg.text;
        break;
      case TemplateSegment::Kind::Np:
        append_np(seg.np_id);
        break;
      case TemplateSegment::Kind::Be: {
        const RealizationPlan& plan = plan_for(seg.np_id);
        bool plural = plan.head_number == Number::Plural ||
                      (plan.collective_head && options.collective_plural_agreement);
        out.text += plural ? "are" : "is";
        break;
      }
      case TemplateSegment::Kind::List: {
        for (std::size_t i = 0; i < seg.list.size(); ++i) {
          if (i > 0) out.text += (i + 1 == seg.list.size()) ? " and " : ", ";
          append_np(seg.list[i]);
        }
        break;
      }
    }
  }

  if (!out.text.empty() && std::islower(static_cast<unsigned char>(out.text[0]))) {
    out.text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out.text[0])));
  }
  for (RenderedRegion& region : out.regions) {
    region.text = out.text.substr(region.start, region.length);
  }
  return out;
}

}  // namespace npgen
