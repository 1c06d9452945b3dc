/*
   Copyright 2026 The t44mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   C interface to the t44mf library.

   Every function returns a t44_status. On failure, t44_last_error() holds a
   message for the calling thread until its next call into the library.
   Strings returned through char** are owned by the caller and released with
   t44_string_free. Rationals are passed as strings: "3", "-2", "3/2".
*/

#ifndef T44_T44_H
#define T44_T44_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define T44_API __declspec(dllexport)
#else
#define T44_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum t44_status {
  T44_OK = 0,
  T44_ERR_NULL_ARGUMENT,
  T44_ERR_INVALID_PARAMETER,
  T44_ERR_DIVISION_BY_ZERO,
  T44_ERR_NOT_DIVISIBLE,
  T44_ERR_ZERO_INPUT,
  T44_ERR_SHAPE_MISMATCH,
  T44_ERR_NOT_SQUARE,
  T44_ERR_SINGULAR,
  T44_ERR_NO_POLYNOMIAL_SOLUTION,
  T44_ERR_TOO_LARGE,
  T44_ERR_INVALID_SIZE,
  T44_ERR_INVALID_MARKS,
  T44_ERR_INVALID_EIGENVALUE,
  T44_ERR_INVALID_TRANSPOSE,
  T44_ERR_SELF_TRANSPOSE,
  T44_ERR_NOT_ADMISSIBLE,
  T44_ERR_NON_SQUARE_RESULT,
  T44_ERR_BAD_ORDERING,
  T44_ERR_NOT_Z_MONOMIAL,
  T44_ERR_VERIFICATION_FAILED,
  T44_ERR_PARSE,
  T44_ERR_INTERNAL
} t44_status;

typedef enum t44_format { T44_FORMAT_TEXT = 0, T44_FORMAT_JSON = 1 } t44_format;

/* Agreement between a derived and a closed-form phi. */
typedef enum t44_agreement {
  T44_AGREE_IDENTITY = 0,
  T44_AGREE_PERMUTATION,
  T44_AGREE_PROFILE,
  T44_AGREE_DIFFERS
} t44_agreement;

typedef struct t44_context t44_context;
typedef struct t44_word t44_word;
typedef struct t44_factorization t44_factorization;

typedef struct t44_solve_options {
  unsigned degree_bound; /* 0 selects the default of 4 */
  unsigned threads;      /* 0 or 1 is single-threaded */
} t44_solve_options;

typedef struct t44_check_options {
  unsigned max_n;
  const char* const* lambdas; /* NULL selects {"2"} */
  size_t lambda_count;
  const char* const* mus; /* NULL selects {"3", "-2"} */
  size_t mu_count;
  uint64_t seed;
  unsigned transform_trials;
  unsigned degree_bound;
  const char* golden_json; /* NULL selects the built-in worked example */
} t44_check_options;

T44_API const char* t44_version(void);
T44_API const char* t44_status_name(t44_status s);
/* Nonzero for statuses caused by bad input rather than a failed check. */
T44_API int t44_status_is_input_error(t44_status s);
T44_API const char* t44_last_error(void);
T44_API void t44_string_free(char* s);

/* mu may be NULL. */
T44_API t44_status t44_context_create(const char* lambda, const char* mu, t44_context** out);
T44_API void t44_context_destroy(t44_context* ctx);

/* family is "w0".."w10"; n < 0 means absent; marks is a string such as "+-" or NULL; mu may be NULL. */
T44_API t44_status t44_word_create(const char* family, int n, const char* marks, int transposed, const char* mu,
                                   t44_word** out);
T44_API void t44_word_destroy(t44_word* w);
/* Label such as "w2(2)+" and the word itself. */
T44_API t44_status t44_word_label(const t44_word* w, char** out);
T44_API t44_status t44_word_string(const t44_word* w, char** out);
/* Every admissible word with n <= max_n, as text lines or a JSON array. */
T44_API t44_status t44_words_enumerate(unsigned max_n, t44_format format, char** out);

/* Closed-form phi with solved psi, verified. opts may be NULL. */
T44_API t44_status t44_factorization_generate(const t44_context* ctx, const t44_word* w, const t44_solve_options* opts,
                                              t44_factorization** out);
/* Parses a serialized factorization without verifying it. */
T44_API t44_status t44_factorization_from_json(const char* json, t44_factorization** out);
T44_API void t44_factorization_destroy(t44_factorization* f);
T44_API t44_status t44_factorization_size(const t44_factorization* f, size_t* out);
T44_API t44_status t44_factorization_to_json(const t44_factorization* f, char** out);
T44_API t44_status t44_factorization_to_text(const t44_factorization* f, int expanded, char** out);
/* Entry (i, j) of phi (which = 0) or psi (which = 1). */
T44_API t44_status t44_factorization_entry(const t44_factorization* f, int which, size_t i, size_t j, int expanded,
                                           char** out);
/* Re-verifies. *ok is set to 1 or 0; report may be NULL. */
T44_API t44_status t44_factorization_verify(const t44_factorization* f, t44_format format, int* ok, char** report);
/* (phi, psi) -> (psi, phi). Fails with T44_ERR_VERIFICATION_FAILED if the input does not verify. */
T44_API t44_status t44_factorization_translate(const t44_factorization* f, t44_factorization** out);

/* Relations pipeline with trace. agreement may be NULL. */
T44_API t44_status t44_derive(const t44_context* ctx, const t44_word* w, t44_format format, int expanded, char** out,
                              t44_agreement* agreement);
/* Pairing report for n <= max_n. ok may be NULL. */
T44_API t44_status t44_ar_report(const t44_context* ctx, unsigned max_n, t44_format format, char** out, int* ok);
/* The full check suite. ok may be NULL. */
T44_API t44_status t44_check_all(const t44_check_options* opts, t44_format format, char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif
