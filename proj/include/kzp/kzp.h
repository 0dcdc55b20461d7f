// Copyright 2026 The kzp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef KZP_KZP_H_
#define KZP_KZP_H_

/*
 * C interface to the kzp library.
 *
 * Every function returns a kzp_status. On failure the thread-local message
 * returned by kzp_last_error() describes the problem. Strings handed back
 * through `char** out` are owned by the caller and released with
 * kzp_string_free(); polynomial handles are released with kzp_poly_free().
 *
 * Requests and reports are JSON documents; their layouts are described in
 * docs/api.md.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(KZP_BUILDING_LIBRARY)
#define KZP_API __declspec(dllexport)
#else
#define KZP_API __declspec(dllimport)
#endif
#else
#define KZP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kzp_status {
  KZP_OK = 0,
  KZP_CHECK_FAILED = 1,   /* the report was produced and some identity failed */
  KZP_EINVAL = 2,         /* malformed arguments */
  KZP_EPRECONDITION = 3,  /* mathematically invalid input, e.g. p | numerator of kappa */
  KZP_EINAPPLICABLE = 4,  /* a theorem's hypotheses do not hold for the input */
  KZP_EPARSE = 5,         /* malformed JSON or JSON of the wrong shape */
  KZP_EAMBIENT = 6,       /* polynomials from different rings */
  KZP_EINTERNAL = 7
} kzp_status;

KZP_API const char* kzp_version(void);
KZP_API const char* kzp_status_name(kzp_status status);
/* Message of the last failing call on this thread; "" after a success. */
KZP_API const char* kzp_last_error(void);
KZP_API void kzp_string_free(char* s);

/* ---- polynomials over F_p[t_1..t_k, z_1..z_n] ------------------------- */

typedef struct kzp_poly kzp_poly;

typedef enum kzp_block { KZP_BLOCK_T = 0, KZP_BLOCK_Z = 1 } kzp_block;

KZP_API kzp_status kzp_poly_from_json(const char* json, kzp_poly** out);
KZP_API kzp_status kzp_poly_to_json(const kzp_poly* a, char** out);
KZP_API kzp_status kzp_poly_to_string(const kzp_poly* a, char** out);
KZP_API kzp_status kzp_poly_add(const kzp_poly* a, const kzp_poly* b, kzp_poly** out);
KZP_API kzp_status kzp_poly_sub(const kzp_poly* a, const kzp_poly* b, kzp_poly** out);
KZP_API kzp_status kzp_poly_mul(const kzp_poly* a, const kzp_poly* b, kzp_poly** out);
KZP_API kzp_status kzp_poly_pow(const kzp_poly* a, uint64_t e, kzp_poly** out);
/* Partial derivative in t_{index} or z_{index}; indices are 0-based. */
KZP_API kzp_status kzp_poly_derivative(const kzp_poly* a, kzp_block block, uint32_t index, kzp_poly** out);
/* a(t + q, z); q has one entry per t-variable. */
KZP_API kzp_status kzp_poly_shift_t(const kzp_poly* a, const int64_t* q, size_t len, kzp_poly** out);
/* Coefficient of t^e, a polynomial in z only. */
KZP_API kzp_status kzp_poly_coeff_t(const kzp_poly* a, const uint32_t* e, size_t len, kzp_poly** out);
KZP_API kzp_status kzp_poly_equal(const kzp_poly* a, const kzp_poly* b, int* out);
KZP_API void kzp_poly_free(kzp_poly* a);

/* ---- high-level operations --------------------------------------------- */

/* Taylor-coefficient solution. Request: {"p", "kappa", "m", "k", "q", "l",
 * optional "exponents" override, optional "factored"}. The result carries a
 * provenance block. */
KZP_API kzp_status kzp_solve(const char* request_json, char** out);

/* Runs one named check ("kz", "singular", "resonance-linear", "ze",
 * "flatness", "cohomology") or "all" against a solution document. `options`
 * may be NULL. Returns KZP_CHECK_FAILED with the report filled in when a
 * check fails. */
KZP_API kzp_status kzp_check(const char* name, const char* solution_json, const char* options_json, char** out);

/* Discrete integrals: {"mode": "theorem" | "gamma" | "poly", ...}. */
KZP_API kzp_status kzp_integrate(const char* request_json, char** out);

/* Point-sum theorems on curves and surfaces: {"kind", "p", optional "x",
 * optional "enforce_gate"}. Without "x" every admissible tuple is checked. */
KZP_API kzp_status kzp_curve(const char* request_json, char** out);

/* Reproducibility suite; level is "quick" or "full". criterion = 0 runs all
 * criteria, otherwise the one with that id. */
KZP_API kzp_status kzp_suite(const char* level, uint64_t seed, int criterion, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KZP_KZP_H_ */
