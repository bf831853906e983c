#ifndef SKVERIFY_SKVERIFY_H
#define SKVERIFY_SKVERIFY_H

/* C interface to the skverify engine. Handles are opaque; every call that can
 * fail returns an skv_status and leaves a message for skv_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SKV_API __declspec(dllexport)
#else
#define SKV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skv_status {
  SKV_OK = 0,
  SKV_ERR_INVALID_ARGUMENT = 1,
  SKV_ERR_PARSE = 2,
  SKV_ERR_CONFIG = 3,
  SKV_ERR_PARAMETER = 4,
  SKV_ERR_DEGREE = 5,
  SKV_ERR_SAMPLING_EXHAUSTED = 6,
  SKV_ERR_IO = 7,
  SKV_ERR_INTERNAL = 8
} skv_status;

typedef enum skv_family { SKV_FAMILY_S3 = 0, SKV_FAMILY_S2 = 1, SKV_FAMILY_S4 = 2 } skv_family;

typedef struct skv_config skv_config;
typedef struct skv_report skv_report;
typedef struct skv_presentation skv_presentation;

SKV_API const char* skv_version(void);
/* Message of the last failure on the calling thread; never NULL. */
SKV_API const char* skv_last_error(void);
SKV_API const char* skv_status_name(skv_status status);
/* Frees strings returned through char** out-parameters. */
SKV_API void skv_string_free(char* s);

/* suite: "s3", "s2", "s4", "quotient", "reps" or "all". */
SKV_API skv_status skv_config_new(const char* suite, skv_config** out);
SKV_API void skv_config_free(skv_config* cfg);
/* "a,b,c" with rational entries. */
SKV_API skv_status skv_config_add_abc(skv_config* cfg, const char* text);
/* "a1,a2"; a3 is completed onto the Sklyanin locus. */
SKV_API skv_status skv_config_add_alpha(skv_config* cfg, const char* text);
SKV_API skv_status skv_config_set_samples(skv_config* cfg, size_t samples);
SKV_API skv_status skv_config_set_seed(skv_config* cfg, uint64_t seed);
SKV_API skv_status skv_config_set_max_degree(skv_config* cfg, size_t degree);
SKV_API skv_status skv_config_set_cache_dir(skv_config* cfg, const char* dir);
/* 0 selects the hardware concurrency. */
SKV_API skv_status skv_config_set_jobs(skv_config* cfg, size_t jobs);

SKV_API skv_status skv_run(const skv_config* cfg, skv_report** out);
SKV_API void skv_report_free(skv_report* report);
SKV_API skv_status skv_report_counts(const skv_report* report, size_t* pass, size_t* fail,
                                     size_t* skipped);
/* 1 when no check failed. */
SKV_API int skv_report_passed(const skv_report* report);
/* format: "json" or "text". */
SKV_API skv_status skv_report_render(const skv_report* report, const char* format, char** out);
SKV_API skv_status skv_report_write(const skv_report* report, const char* format,
                                    const char* path);

/* params: "a,b,c" for S3 and S2, "a1,a2" for S4 (alpha normalization). */
SKV_API skv_status skv_presentation_new(skv_family family, const char* params,
                                        skv_presentation** out);
SKV_API void skv_presentation_free(skv_presentation* p);
/* Writes dims[0..N]; dims must hold N + 1 entries. */
SKV_API skv_status skv_presentation_hilbert(const skv_presentation* p, size_t N, size_t* dims);
SKV_API skv_status skv_presentation_centralizer_dim(const skv_presentation* p, size_t degree,
                                                    size_t* out);
/* poly in the generator names, e.g. "2*x*y + -1*y*x". */
SKV_API skv_status skv_presentation_in_ideal(const skv_presentation* p, const char* poly,
                                             int* out);
SKV_API skv_status skv_presentation_is_central(const skv_presentation* p, const char* poly,
                                               int* out);

#ifdef __cplusplus
}
#endif

#endif
