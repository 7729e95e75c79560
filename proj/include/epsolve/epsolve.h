/*
 * Copyright 2026 The epsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libepsolve.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Functions that produce text return a heap string through
 * an out parameter, to be released with epsolve_string_free. Every function
 * returning epsolve_status records a message and a JSON error document for
 * the calling thread on failure.
 */
#ifndef EPSOLVE_H
#define EPSOLVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define EPSOLVE_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define EPSOLVE_API __attribute__((visibility("default")))
#else
#  define EPSOLVE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epsolve_status {
  EPSOLVE_OK = 0,
  EPSOLVE_ERR_INVALID_INPUT = 1,
  EPSOLVE_ERR_SHAPE_MISMATCH = 2,
  EPSOLVE_ERR_CAP_EXCEEDED = 3,
  EPSOLVE_ERR_INVARIANT = 4,
  EPSOLVE_ERR_PARSE = 5,
  EPSOLVE_ERR_NOT_FOUND = 6,
  EPSOLVE_ERR_NULL_ARGUMENT = 7,
  EPSOLVE_ERR_INTERNAL = 8
} epsolve_status;

typedef struct epsolve_poset epsolve_poset;
typedef struct epsolve_functor epsolve_functor;
typedef struct epsolve_cocone epsolve_cocone;

/* Run options. Initialise with epsolve_options_init, then override. */
typedef struct epsolve_options {
  uint32_t depth;          /* solve: number of iteration steps */
  uint64_t seed;           /* property suites */
  uint32_t cases;          /* random chains per pair kind */
  uint32_t max_size;       /* chain objects have at most this many elements */
  uint32_t max_len;        /* chains have at most this many links */
  uint32_t apex_max;       /* apexes of enumerated cocones */
  uint32_t functor_height; /* height of the generated functor family */
  uint32_t threads;        /* 0: hardware concurrency */
  uint64_t cap_elems;      /* largest poset any construction may build */
  uint64_t hom_cap;        /* largest |A|*|B| for pair enumeration */
  uint32_t max_depth;      /* largest accepted depth */
} epsolve_options;

EPSOLVE_API void epsolve_options_init(epsolve_options* opts);

EPSOLVE_API const char* epsolve_version(void);
EPSOLVE_API const char* epsolve_status_name(epsolve_status status);

/* Valid until the next failing call on the same thread. */
EPSOLVE_API const char* epsolve_last_error_message(void);
EPSOLVE_API const char* epsolve_last_error_json(void);

EPSOLVE_API void epsolve_string_free(char* s);

/* Posets. JSON: {"elems":[names], "leq":[[bool]] (row i, column j: i <= j),
   "bottom":name|null}. Builtin names: "1", "2-chain", "3-chain", "diamond",
   "vee". */
EPSOLVE_API epsolve_status epsolve_poset_from_json(const char* json, epsolve_poset** out);
EPSOLVE_API epsolve_status epsolve_poset_builtin(const char* name, epsolve_poset** out);
EPSOLVE_API void epsolve_poset_free(epsolve_poset* p);
EPSOLVE_API size_t epsolve_poset_size(const epsolve_poset* p);
EPSOLVE_API epsolve_status epsolve_poset_to_json(const epsolve_poset* p, char** out);
EPSOLVE_API epsolve_status epsolve_poset_canonical_form(const epsolve_poset* p, char** out);
EPSOLVE_API epsolve_status epsolve_poset_iso(const epsolve_poset* a, const epsolve_poset* b, int* out);

/* Functor expressions in the equation grammar, e.g. "lift(unit + D)". */
EPSOLVE_API epsolve_status epsolve_functor_parse(const char* text, epsolve_functor** out);
EPSOLVE_API void epsolve_functor_free(epsolve_functor* f);
EPSOLVE_API epsolve_status epsolve_functor_to_string(const epsolve_functor* f, char** out);
EPSOLVE_API epsolve_status epsolve_functor_apply(const epsolve_functor* f, const epsolve_poset* p,
                                                 const epsolve_options* opts, epsolve_poset** out);

/* Cocones: {"chain":{...}, "apex":P, "legs":[pairs], "posets":{name: poset}}
   where P is a registry or builtin name, or an inline poset. */
EPSOLVE_API epsolve_status epsolve_cocone_from_json(const char* json, epsolve_cocone** out);
EPSOLVE_API void epsolve_cocone_free(epsolve_cocone* k);
EPSOLVE_API epsolve_status epsolve_cocone_check_ld(const epsolve_cocone* k, const epsolve_options* opts,
                                                   char** report_json, int* verdict);
EPSOLVE_API epsolve_status epsolve_cocone_is_colimiting(const epsolve_cocone* k,
                                                        const epsolve_options* opts, int* out);
/* f may be NULL to run the generated family. *all_ok is 1 when every checked
   image is colimiting and locally determined. */
EPSOLVE_API epsolve_status epsolve_cocone_preserve(const epsolve_cocone* k, const epsolve_functor* f,
                                                   const epsolve_options* opts, char** report_json,
                                                   int* all_ok);

/* Iterates "D = <expr>" from the one-point poset. csv may be NULL. */
EPSOLVE_API epsolve_status epsolve_solve(const char* equation, const epsolve_options* opts,
                                         char** report_json, char** stages_csv);

EPSOLVE_API epsolve_status epsolve_verify_theorems(const epsolve_options* opts, char** report_json,
                                                   int* all_pass);
EPSOLVE_API epsolve_status epsolve_yoneda_demo(const epsolve_options* opts, char** report_json,
                                               int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* EPSOLVE_H */
