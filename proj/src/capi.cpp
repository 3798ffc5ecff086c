#include "npgen.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "errors.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"
#include "scoring.hpp"
#include "source_ir.hpp"

struct npgen_lexicon {
  npgen::Lexicon lexicon;
};

struct npgen_corpus {
  std::vector<npgen::SentenceIR> sentences;
};

namespace {

thread_local std::string g_last_error;

npgen_status status_for(npgen::ErrorKind kind) {
  switch (kind) {
    case npgen::ErrorKind::Io: return NPGEN_ERR_IO;
    case npgen::ErrorKind::Parse: return NPGEN_ERR_PARSE;
    case npgen::ErrorKind::Validation: return NPGEN_ERR_VALIDATION;
    case npgen::ErrorKind::UnknownLemma: return NPGEN_ERR_UNKNOWN_LEMMA;
    case npgen::ErrorKind::BadId: return NPGEN_ERR_BAD_ID;
    case npgen::ErrorKind::BadArgument: return NPGEN_ERR_ARGUMENT;
    case npgen::ErrorKind::Internal: return NPGEN_ERR_INTERNAL;
  }
  return NPGEN_ERR_INTERNAL;
}

template <typename Fn>
npgen_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NPGEN_OK;
  } catch (const npgen::Error& e) {
    g_last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NPGEN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NPGEN_ERR_INTERNAL;
  }
}

npgen_status set_argument_error(const char* message) {
  g_last_error = message;
  return NPGEN_ERR_ARGUMENT;
}

char* copy_text(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

npgen::PlanOptions plan_options(const npgen_options* options) {
  npgen::PlanOptions out;
  if (options) {
    out.some_insertion = options->some_insertion != 0;
    out.collective_plural_agreement = options->collective_plural_agreement != 0;
  }
  return out;
}

}  // namespace

extern "C" {

const char* npgen_version(void) { return "1.0.0"; }

const char* npgen_last_error(void) { return g_last_error.c_str(); }

npgen_status npgen_lexicon_open(const char* dir, npgen_lexicon** out) {
  if (!dir || !out) return set_argument_error("npgen_lexicon_open: null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<npgen_lexicon>();
    handle->lexicon = npgen::load_lexicon_dir(dir);
    *out = handle.release();
  });
}

npgen_status npgen_lexicon_save(const npgen_lexicon* lexicon, const char* dir) {
  if (!lexicon || !dir) return set_argument_error("npgen_lexicon_save: null argument");
  return guarded([&] { npgen::save_lexicon_dir(lexicon->lexicon, dir); });
}

void npgen_lexicon_close(npgen_lexicon* lexicon) { delete lexicon; }

size_t npgen_lexicon_noun_count(const npgen_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.nouns().size() : 0;
}

npgen_status npgen_corpus_open(const char* path, npgen_corpus** out) {
  if (!path || !out) return set_argument_error("npgen_corpus_open: null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<npgen_corpus>();
    handle->sentences = npgen::parse_document_file(path);
    *out = handle.release();
  });
}

npgen_status npgen_corpus_read(const char* text, size_t length, npgen_corpus** out) {
  if (!text || !out) return set_argument_error("npgen_corpus_read: null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<npgen_corpus>();
    handle->sentences = npgen::parse_document(std::string(text, length));
    *out = handle.release();
  });
}

void npgen_corpus_close(npgen_corpus* corpus) { delete corpus; }

size_t npgen_corpus_sentence_count(const npgen_corpus* corpus) {
  return corpus ? corpus->sentences.size() : 0;
}

npgen_status npgen_translate(const npgen_lexicon* lexicon, const npgen_corpus* corpus,
                             const npgen_options* options, char** out_text) {
  if (!lexicon || !corpus || !out_text) {
    return set_argument_error("npgen_translate: null argument");
  }
  *out_text = nullptr;
  return guarded([&] {
    auto results =
        npgen::translate_corpus(corpus->sentences, lexicon->lexicon, plan_options(options));
    *out_text = copy_text(npgen::format_translation_output(results));
  });
}

npgen_status npgen_trace(const npgen_lexicon* lexicon, const npgen_corpus* corpus,
                         const char* sentence_id, int np_id, const npgen_options* options,
                         char** out_text) {
  if (!lexicon || !corpus || !sentence_id || !out_text) {
    return set_argument_error("npgen_trace: null argument");
  }
  *out_text = nullptr;
  return guarded([&] {
    *out_text = copy_text(npgen::trace_np(corpus->sentences, lexicon->lexicon, sentence_id,
                                          np_id, plan_options(options)));
  });
}

npgen_status npgen_score_files(const char* hypotheses_path, const char* gold_path, int flags,
                               npgen_score_summary* summary, char** out_report) {
  if (!hypotheses_path || !gold_path) {
    return set_argument_error("npgen_score_files: null argument");
  }
  if (out_report) *out_report = nullptr;
  return guarded([&] {
    npgen::ScoreReport report = npgen::score_against_gold_file(hypotheses_path, gold_path);
    if (summary) {
      summary->np_total = static_cast<unsigned>(report.np_total);
      summary->np_correct = static_cast<unsigned>(report.np_correct);
      summary->sentence_total = static_cast<unsigned>(report.sentence_total);
      summary->sentence_correct = static_cast<unsigned>(report.sentence_correct);
      summary->np_accuracy = report.np_accuracy;
      summary->sentence_accuracy = report.sentence_accuracy;
    }
    if (out_report) {
      npgen::ScoreOptions options;
      options.per_sentence = (flags & NPGEN_SCORE_PER_SENTENCE) != 0;
      options.breakdown = (flags & NPGEN_SCORE_BREAKDOWN) != 0;
      *out_report = copy_text(npgen::format_score_report(report, options));
    }
  });
}

void npgen_free_text(char* text) { delete[] text; }

}  // extern "C"
