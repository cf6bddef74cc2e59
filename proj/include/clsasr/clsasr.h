// Copyright 2026 The clsasr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the clsasr library.
 *
 * Every fallible function returns a clsasr_status. On failure the message
 * for the calling thread is available from clsasr_last_error() until the
 * next failing call on that thread. Strings returned through `char**` are
 * NUL-terminated UTF-8 owned by the caller and released with
 * clsasr_string_free(). Input strings are UTF-8 and must not be NULL unless
 * stated otherwise. */
#ifndef CLSASR_CLSASR_H_
#define CLSASR_CLSASR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CLSASR_BUILDING)
#define CLSASR_API __attribute__((visibility("default")))
#else
#define CLSASR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clsasr_status {
  CLSASR_OK = 0,
  CLSASR_E_ARGUMENT = 1,
  CLSASR_E_DECODE = 2,
  CLSASR_E_MALFORMED_WORD = 3,
  CLSASR_E_MIXED_SCRIPT = 4,
  CLSASR_E_INVENTORY_GAP = 5,
  CLSASR_E_UNMAPPABLE_CHAR = 6,
  CLSASR_E_UNKNOWN_LABEL = 7,
  CLSASR_E_MALFORMED_CLS = 8,
  CLSASR_E_MISSING_LID = 9,
  CLSASR_E_ALREADY_TAGGED = 10,
  CLSASR_E_IO = 11,
  CLSASR_E_PARSE = 12,
  CLSASR_E_UNKNOWN_ID = 13,
  CLSASR_E_UNDEFINED_RATE = 14,
  CLSASR_E_INTERNAL = 15
} clsasr_status;

typedef enum clsasr_language {
  CLSASR_LANG_HINDI = 0,
  CLSASR_LANG_MARATHI = 1,
  CLSASR_LANG_GUJARATI = 2,
  CLSASR_LANG_BENGALI = 3,
  CLSASR_LANG_ODIA = 4,
  /* cls -> native only: read the language from the leading LID token */
  CLSASR_LANG_UNIFIED = -1
} clsasr_language;

typedef enum clsasr_script {
  CLSASR_SCRIPT_DEVANAGARI = 0,
  CLSASR_SCRIPT_GUJARATI = 1,
  CLSASR_SCRIPT_BENGALI = 2,
  CLSASR_SCRIPT_ODIA = 3
} clsasr_script;

typedef enum clsasr_flavor {
  CLSASR_FLAVOR_NATIVE = 0,
  CLSASR_FLAVOR_NATIVE_LID = 1,
  CLSASR_FLAVOR_CLS = 2,
  CLSASR_FLAVOR_CLS_LID = 3
} clsasr_flavor;

/* Conversion flags. */
#define CLSASR_NO_SCHWA_DELETION 0x1u
#define CLSASR_NO_GEMINATE 0x2u
#define CLSASR_FUZZY 0x4u

/* Scoring flags. */
#define CLSASR_SCORE_NORMALIZE 0x1u
#define CLSASR_SCORE_MISSING_IS_ERROR 0x2u
#define CLSASR_SCORE_CER 0x4u

typedef struct clsasr_context clsasr_context;
typedef struct clsasr_lexicon_builder clsasr_lexicon_builder;

CLSASR_API const char* clsasr_version(void);
CLSASR_API const char* clsasr_status_name(int status);
CLSASR_API const char* clsasr_last_error(void);
CLSASR_API void clsasr_string_free(char* s);

/* Lower-case names ("hindi", "devanagari"); "oriya" is accepted. Return -1
 * for unknown names. */
CLSASR_API int clsasr_language_from_name(const char* name);
CLSASR_API const char* clsasr_language_name(int lang);
CLSASR_API int clsasr_script_from_name(const char* name);
CLSASR_API const char* clsasr_script_name(int script);
CLSASR_API int clsasr_flavor_from_name(const char* name);

/* data_dir may be NULL for the built-in tables; otherwise it must hold
 * categories.tsv, inventory.tsv and schwa_rules.tsv. */
CLSASR_API clsasr_status clsasr_context_new(const char* data_dir, clsasr_context** out);
CLSASR_API void clsasr_context_free(clsasr_context* ctx);
/* Template containing "{lang}", default "<{lang}". */
CLSASR_API clsasr_status clsasr_context_set_lid_format(clsasr_context* ctx, const char* format);
/* Strict (default): a failing word fails the whole call. Lenient: the word
 * is dropped and counted. */
CLSASR_API clsasr_status clsasr_context_set_strict(clsasr_context* ctx, int strict);
/* Label text of a previously built lexicon (key<TAB>native<TAB>count). */
CLSASR_API clsasr_status clsasr_context_load_lexicon(clsasr_context* ctx, int lang,
                                                     const char* tsv, int validate);

CLSASR_API clsasr_status clsasr_normalize(const char* text, char** out);

typedef struct clsasr_detection {
  int kind;  /* 0 single script, 1 mixed, 2 none */
  int script;
  size_t counts[4];  /* indexed by clsasr_script */
} clsasr_detection;

CLSASR_API clsasr_status clsasr_detect(const char* text, clsasr_detection* out);

CLSASR_API clsasr_status clsasr_transliterate(const clsasr_context* ctx, const char* text,
                                              int from_script, int to_script, char** out);

/* Native text -> label text ("k a m a l | ..."). `dropped` (may be NULL)
 * receives the number of words dropped in lenient mode. */
CLSASR_API clsasr_status clsasr_to_cls(const clsasr_context* ctx, const char* text, int lang,
                                       unsigned flags, char** out, size_t* dropped);

typedef struct clsasr_ns_counts {
  size_t exact;
  size_t lexicon_hits;
  size_t ambiguous;
  size_t dropped;
  int language; /* the language used, useful in unified mode */
} clsasr_ns_counts;

/* Label text -> native text using the context's lexicons. lang may be
 * CLSASR_LANG_UNIFIED. `counts` may be NULL. */
CLSASR_API clsasr_status clsasr_to_ns(const clsasr_context* ctx, const char* text, int lang,
                                      unsigned flags, char** out, clsasr_ns_counts* counts);

CLSASR_API clsasr_status clsasr_lexicon_builder_new(const clsasr_context* ctx, int lang,
                                                    unsigned flags,
                                                    clsasr_lexicon_builder** out);
CLSASR_API void clsasr_lexicon_builder_free(clsasr_lexicon_builder* b);
/* Any number of native-script lines. */
CLSASR_API clsasr_status clsasr_lexicon_builder_add(clsasr_lexicon_builder* b, const char* text);
CLSASR_API clsasr_status clsasr_lexicon_builder_counts(const clsasr_lexicon_builder* b,
                                                       size_t* words, size_t* skipped,
                                                       size_t* entries);
CLSASR_API clsasr_status clsasr_lexicon_builder_tsv(const clsasr_lexicon_builder* b, char** out);

typedef struct clsasr_prep_counts {
  size_t utterances;
  size_t targets;
  size_t errors;
  size_t warnings;
} clsasr_prep_counts;

/* Manifest text -> targets (id<TAB>target) and a report
 * (id<TAB>stage<TAB>message: errors, then warnings). Per-utterance problems
 * go to the report; only structural manifest problems fail the call. */
CLSASR_API clsasr_status clsasr_prep(const clsasr_context* ctx, const char* manifest,
                                     int flavor, char** targets, char** report,
                                     clsasr_prep_counts* counts);

typedef struct clsasr_stats {
  int64_t duration_ms[5]; /* indexed by clsasr_language */
  size_t utterances[5];
  int64_t total_duration_ms;
  size_t total_utterances;
  size_t errors;
} clsasr_stats;

/* `table` and `report` may be NULL. */
CLSASR_API clsasr_status clsasr_corpus_stats(const char* manifest, clsasr_stats* out,
                                             char** table, char** report);

typedef struct clsasr_counts {
  size_t substitutions;
  size_t deletions;
  size_t insertions;
  size_t matches;
  size_t ref_tokens;
} clsasr_counts;

/* rate is NaN when undefined (empty reference, non-empty hypothesis);
 * `flagged` is set whenever the reference is empty. */
CLSASR_API clsasr_status clsasr_wer(const char* ref, const char* hyp, double* rate,
                                    clsasr_counts* counts, int* flagged);
CLSASR_API clsasr_status clsasr_cer(const char* ref, const char* hyp, double* rate,
                                    clsasr_counts* counts, int* flagged);

/* refs and hyps are id<TAB>text lines; langs (may be NULL) is id<TAB>lang.
 * Produces a one-row report TSV for `system`. `overall` may be NULL. */
CLSASR_API clsasr_status clsasr_score(const char* refs, const char* hyps, const char* langs,
                                      const char* system, unsigned flags, char** report_tsv,
                                      clsasr_counts* overall);

/* Merges report TSVs in order and renders them; format 0 text, 1 TSV. */
CLSASR_API clsasr_status clsasr_report_render(const char* const* report_tsvs, size_t count,
                                              int format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CLSASR_CLSASR_H_ */
