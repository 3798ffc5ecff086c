/* npgen: noun-phrase number and countability realization for
 * Japanese-to-English transfer, behind a plain C interface.
 *
 * All handles are opaque; every fallible call returns npgen_status and leaves
 * a message retrievable with npgen_last_error() on the calling thread.
 * Strings returned through char** are owned by the caller and must be
 * released with npgen_free_text().
 */
#ifndef NPGEN_H
#define NPGEN_H

#include <stddef.h>

#if defined(_WIN32)
#define NPGEN_API __declspec(dllexport)
#else
#define NPGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum npgen_status {
  NPGEN_OK = 0,
  NPGEN_ERR_ARGUMENT = 1,
  NPGEN_ERR_IO = 2,
  NPGEN_ERR_PARSE = 3,
  NPGEN_ERR_VALIDATION = 4,
  NPGEN_ERR_UNKNOWN_LEMMA = 5,
  NPGEN_ERR_BAD_ID = 6,
  NPGEN_ERR_INTERNAL = 7
} npgen_status;

typedef struct npgen_lexicon npgen_lexicon;
typedef struct npgen_corpus npgen_corpus;

typedef struct npgen_options {
  int some_insertion;              /* "some" for indefinite plural/mass objects */
  int collective_plural_agreement; /* British-style "the team are" */
} npgen_options;

typedef struct npgen_score_summary {
  unsigned np_total;
  unsigned np_correct;
  unsigned sentence_total;
  unsigned sentence_correct;
  double np_accuracy;
  double sentence_accuracy;
} npgen_score_summary;

/* Flags for npgen_score_files. */
#define NPGEN_SCORE_PER_SENTENCE 1
#define NPGEN_SCORE_BREAKDOWN 2

NPGEN_API const char* npgen_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
NPGEN_API const char* npgen_last_error(void);

/* Loads nouns.tsv, verbs.tsv, modifiers.tsv, classifiers.tsv, hierarchy.tsv
 * and optional an_exceptions.txt from one directory. */
NPGEN_API npgen_status npgen_lexicon_open(const char* dir, npgen_lexicon** out);
NPGEN_API npgen_status npgen_lexicon_save(const npgen_lexicon* lexicon, const char* dir);
NPGEN_API void npgen_lexicon_close(npgen_lexicon* lexicon);
NPGEN_API size_t npgen_lexicon_noun_count(const npgen_lexicon* lexicon);

/* Corpus files carry one sentence record per line (.npir). */
NPGEN_API npgen_status npgen_corpus_open(const char* path, npgen_corpus** out);
NPGEN_API npgen_status npgen_corpus_read(const char* text, size_t length, npgen_corpus** out);
NPGEN_API void npgen_corpus_close(npgen_corpus* corpus);
NPGEN_API size_t npgen_corpus_sentence_count(const npgen_corpus* corpus);

/* Translates every sentence; *out_text receives the record stream (one JSON
 * record per sentence plus a '#' footer). options may be NULL for defaults. */
NPGEN_API npgen_status npgen_translate(const npgen_lexicon* lexicon, const npgen_corpus* corpus,
                                       const npgen_options* options, char** out_text);

/* Rule-firing listing for one NP of one sentence. */
NPGEN_API npgen_status npgen_trace(const npgen_lexicon* lexicon, const npgen_corpus* corpus,
                                   const char* sentence_id, int np_id,
                                   const npgen_options* options, char** out_text);

/* Scores a translate output stream against a gold corpus whose sentences mark
 * NP regions as [[id:text]]. summary and out_report may each be NULL. */
NPGEN_API npgen_status npgen_score_files(const char* hypotheses_path, const char* gold_path,
                                         int flags, npgen_score_summary* summary,
                                         char** out_report);

NPGEN_API void npgen_free_text(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NPGEN_H */
