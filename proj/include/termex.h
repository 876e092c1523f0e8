/* Copyright 2026 The termex authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C API of the termex terminology-extraction library.
 *
 * Conventions:
 *   - Every fallible function returns a termex_status; TERMEX_OK is zero.
 *   - On failure, termex_last_error() describes what went wrong for the
 *     calling thread.
 *   - Output objects are returned through out-parameters and owned by the
 *     caller; free handles with the matching *_free and strings with
 *     termex_string_free.
 *   - Non-fatal diagnostics accumulate per thread and can be drained with
 *     termex_take_warnings.
 *   - Handles are immutable once created and may be shared across threads.
 */

#ifndef TERMEX_H_
#define TERMEX_H_

#include <stddef.h>

#if defined(_WIN32)
#define TERMEX_API __declspec(dllexport)
#elif defined(__GNUC__)
#define TERMEX_API __attribute__((visibility("default")))
#else
#define TERMEX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int termex_status;
#define TERMEX_OK 0
#define TERMEX_ERR_INVALID 1 /* bad arguments, options, or object state */
#define TERMEX_ERR_IO 2      /* file could not be read or written */
#define TERMEX_ERR_PARSE 3   /* malformed input data */

typedef struct termex_opts termex_opts;
typedef struct termex_corpus termex_corpus;
typedef struct termex_termlist termex_termlist;
typedef struct termex_matrix termex_matrix;
typedef struct termex_overlap termex_overlap;

/* ---- diagnostics and identification ------------------------------------ */

TERMEX_API const char* termex_version(void);
TERMEX_API const char* termex_build_hash(void);
TERMEX_API const char* termex_default_stopwords_hash(void);

/* Message for the last failing call on this thread; empty if none. */
TERMEX_API const char* termex_last_error(void);

/* Newline-joined warnings accumulated on this thread since the last call;
 * NULL when there are none. Caller frees. */
TERMEX_API char* termex_take_warnings(void);

TERMEX_API void termex_string_free(char* s);

/* ---- options ------------------------------------------------------------ */

/* Known keys (values are strings):
 *   math = delete | placeholder      placeholder_token = <token>
 *   stopwords = <path>               expand_co = true | false
 *   damping, tolerance, keep_ratio   (floating point)
 *   max_iterations, window           (integers)
 *   candidate_pos = NOUN,PROPN,ADJ   chunker_extended = true | false
 * Unknown keys are rejected with TERMEX_ERR_INVALID. */
TERMEX_API termex_opts* termex_opts_new(void);
TERMEX_API termex_status termex_opts_set(termex_opts* opts, const char* key,
                                         const char* value);
TERMEX_API void termex_opts_free(termex_opts* opts);

/* ---- cleaning and corpus I/O -------------------------------------------- */

TERMEX_API termex_status termex_clean_text(const termex_opts* opts,
                                           const char* text, char** out);

TERMEX_API termex_status termex_corpus_parse_conllu(const char* text,
                                                    termex_corpus** out);
TERMEX_API termex_status termex_corpus_read_conllu(const char* path,
                                                   termex_corpus** out);
/* JSON-lines abstracts: cleaned, segmented, and tokenized with fallback
 * annotations (lemma = lowercased form, upos = X). */
TERMEX_API termex_status termex_corpus_read_jsonl(const termex_opts* opts,
                                                  const char* path,
                                                  termex_corpus** out);
TERMEX_API termex_status termex_corpus_write_conllu(const termex_corpus* c,
                                                    char** out);
TERMEX_API size_t termex_corpus_num_documents(const termex_corpus* c);
TERMEX_API size_t termex_corpus_num_sentences(const termex_corpus* c);
TERMEX_API size_t termex_corpus_num_tokens(const termex_corpus* c);
TERMEX_API void termex_corpus_free(termex_corpus* c);

/* ---- normalization ------------------------------------------------------ */

/* Canonical key for a phrase. Sets *out to NULL when nothing survives
 * normalization (e.g. a pure stop-word phrase). */
TERMEX_API termex_status termex_normalize(const termex_opts* opts,
                                          const char* phrase, char** out);

/* ---- term lists ---------------------------------------------------------- */

/* Term-list file format: one term per line, optional tab-separated source
 * label, '#' comments. */
TERMEX_API termex_status termex_termlist_read(const termex_opts* opts,
                                              const char* path,
                                              const char* name,
                                              termex_termlist** out);
TERMEX_API termex_status termex_termlist_render(const termex_termlist* list,
                                                char** out);
TERMEX_API size_t termex_termlist_size(const termex_termlist* list);
TERMEX_API const char* termex_termlist_name(const termex_termlist* list);
/* Key and surface of the idx-th term in key order. Pointers stay valid while
 * the list lives. */
TERMEX_API termex_status termex_termlist_entry(const termex_termlist* list,
                                               size_t idx, const char** key,
                                               const char** surface);
/* Reference lists carry a quality profile saying which metric to trust;
 * fails with TERMEX_ERR_INVALID on plain term lists. */
TERMEX_API termex_status termex_termlist_profile(const termex_termlist* list,
                                                 int* precision_reliable,
                                                 int* recall_reliable);
/* Free-text profile note, or NULL. Owned by the list. */
TERMEX_API const char* termex_termlist_note(const termex_termlist* list);
TERMEX_API void termex_termlist_free(termex_termlist* list);

/* ---- extractors ---------------------------------------------------------- */

TERMEX_API termex_status termex_extract_textrank(const termex_opts* opts,
                                                 const termex_corpus* corpus,
                                                 termex_termlist** out);
TERMEX_API termex_status termex_extract_chunker(const termex_opts* opts,
                                                const termex_corpus* corpus,
                                                termex_termlist** out);
TERMEX_API termex_status termex_extract_gazetteer(
    const termex_opts* opts, const termex_corpus* corpus,
    const termex_termlist* gazetteer, termex_termlist** out);

/* ---- reference lists ----------------------------------------------------- */

TERMEX_API termex_status termex_ref_author_keywords(const termex_opts* opts,
                                                    const termex_corpus* c,
                                                    termex_termlist** out);
TERMEX_API termex_status termex_ref_wiki_titles(const termex_opts* opts,
                                                const char* titles_path,
                                                termex_termlist** out);
TERMEX_API termex_status termex_ref_noun_phrases(const termex_opts* opts,
                                                 const termex_corpus* c,
                                                 termex_termlist** out);

/* Drops reference terms that never occur in the corpus. report_json may be
 * NULL; otherwise it receives {"kept": [...], "removed": [...]}. */
TERMEX_API termex_status termex_filter_extractive(const termex_opts* opts,
                                                  const termex_termlist* list,
                                                  const termex_corpus* corpus,
                                                  termex_termlist** kept,
                                                  char** report_json);

/* mode is "union" or "intersection"; needs at least two lists. */
TERMEX_API termex_status termex_combine(const termex_termlist* const* lists,
                                        size_t n, const char* mode,
                                        const char* name,
                                        termex_termlist** out);

/* ---- evaluation ----------------------------------------------------------- */

/* Filters the reference against the corpus, then emits the full result as
 * JSON: {extractor, reference, tp, fp, fn, precision, recall, f1, warnings,
 * tp_terms, fp_terms, fn_terms}. */
TERMEX_API termex_status termex_evaluate(const termex_opts* opts,
                                         const termex_termlist* pred,
                                         const termex_termlist* ref,
                                         const termex_corpus* corpus,
                                         char** result_json);

/* Score arithmetic alone: {"precision": p, "recall": r, "f1": f,
 * "warnings": [...]}. */
TERMEX_API termex_status termex_metrics_json(long long tp, long long fp,
                                             long long fn, char** out);

/* ---- result tables -------------------------------------------------------- */

TERMEX_API termex_status termex_matrix_new(const char* reference_name,
                                           termex_matrix** out);
/* Adds one termex_evaluate result as a column. */
TERMEX_API termex_status termex_matrix_add_result(termex_matrix* m,
                                                  const char* result_json);
/* format: markdown | csv | json */
TERMEX_API termex_status termex_matrix_render(const termex_matrix* m,
                                              const char* format, char** out);
TERMEX_API void termex_matrix_free(termex_matrix* m);

/* ---- overlap decomposition ------------------------------------------------ */

TERMEX_API termex_status termex_overlap_compute(
    const termex_termlist* const* lists, size_t n, termex_overlap** out);
TERMEX_API termex_status termex_overlap_render(const termex_overlap* o,
                                               const char* format, char** out);
TERMEX_API void termex_overlap_free(termex_overlap* o);

/* ---- digests --------------------------------------------------------------- */

TERMEX_API termex_status termex_sha256_string(const char* data, size_t len,
                                              char** out_hex);
TERMEX_API termex_status termex_sha256_file(const char* path, char** out_hex);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TERMEX_H_ */
