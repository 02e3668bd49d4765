/* Licensed under the Apache License 2.0 (see LICENSE file). */

/* C interface to the discriminant library. Every call returns a status code;
 * payloads are heap strings owned by the caller (release with bdisc_string_free).
 * Parameters are exact rational literals such as "-3", "7/2". */

#ifndef BDISC_BDISC_H
#define BDISC_BDISC_H

#include <stddef.h>
#include <stdint.h>

#if defined(BDISC_BUILDING_LIBRARY)
#define BDISC_API __attribute__((visibility("default")))
#else
#define BDISC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdisc_status {
  BDISC_OK = 0,
  BDISC_E_USAGE = 1,     /* bad class tag, literal, arity, axes or viewport */
  BDISC_E_DOMAIN = 2,    /* parameter on the discriminant, type mismatch, ... */
  BDISC_E_NOT_FOUND = 3, /* path search ran out of budget (inconclusive) */
  BDISC_E_INTERNAL = 4
} bdisc_status;

typedef struct bdisc_class bdisc_class;

typedef struct bdisc_atlas_options {
  uint64_t seed;
  uint64_t samples;      /* 0: class default */
  const char* box;       /* rational literal; NULL: 5 */
  int grid;              /* grid points per axis; 0: 3 */
  int denominator_bound; /* 0: 64 */
  unsigned jobs;         /* 0: 1 */
} bdisc_atlas_options;

/* Accepts tags such as "B+4", "-B5", "C5+", "F4-". */
BDISC_API bdisc_status bdisc_class_parse(const char* tag, bdisc_class** out);
BDISC_API void bdisc_class_free(bdisc_class* cls);

/* Class metadata as JSON. */
BDISC_API bdisc_status bdisc_info(const bdisc_class* cls, char** json_out);

/* {"membership":...,"type":...}. For a discriminant parameter the JSON still
 * carries the membership and the status is BDISC_E_DOMAIN. */
BDISC_API bdisc_status bdisc_classify(const bdisc_class* cls, const char* const* params, size_t n, char** json_out);

BDISC_API bdisc_status bdisc_atlas(const bdisc_class* cls, const bdisc_atlas_options* opts, char** json_out);

/* Path certificate between two parameters of the same type. With different
 * types the JSON holds the crossing witness of the straight segment and the
 * status is BDISC_E_DOMAIN. */
BDISC_API bdisc_status bdisc_certify(const bdisc_class* cls, const char* const* from, const char* const* to, size_t n,
                                     int budget, uint64_t seed, char** json_out);

/* SVG of the zero set; file_name_out (optional) receives the suggested file name. */
BDISC_API bdisc_status bdisc_render(const bdisc_class* cls, const char* const* params, size_t n, char** svg_out,
                                    char** file_name_out);

/* SVG of a 2-D parameter slice; unlisted parameters are 0. */
BDISC_API bdisc_status bdisc_render_slice(const bdisc_class* cls, const char* const* fixed_names,
                                          const char* const* fixed_values, size_t n_fixed, const char* axis_x,
                                          const char* axis_y, char** svg_out);

/* The F4 discriminant polynomials as JSON. */
BDISC_API bdisc_status bdisc_eliminant(char** json_out);

/* Message and error-kind name of the last failure on this thread. */
BDISC_API const char* bdisc_last_error(void);
BDISC_API const char* bdisc_last_error_kind(void);

BDISC_API void bdisc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
