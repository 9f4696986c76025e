#ifndef STRENGTH_FANO_H
#define STRENGTH_FANO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

typedef enum sf_status {
    SF_OK = 0,
    SF_ERR_INPUT = 1,
    SF_ERR_VERIFICATION = 2,
    SF_INCONCLUSIVE = 3,
    SF_ERR_INTERNAL = 4,
    SF_ERR_ARGUMENT = 5
} sf_status;

typedef struct sf_field sf_field;
typedef struct sf_poly sf_poly;
typedef struct sf_job sf_job;
typedef struct sf_report sf_report;

SF_API const char* sf_version(void);
/* Message for the last failing call on this thread; never NULL. */
SF_API const char* sf_last_error(void);

/* "rat" or "fp:<p>" */
SF_API sf_status sf_field_create(const char* spec, sf_field** out);
SF_API void sf_field_destroy(sf_field* field);

/* vars: comma-separated declared ring, or NULL to use the variables that occur. */
SF_API sf_status sf_poly_parse(const sf_field* field, const char* text, const char* vars, sf_poly** out);
SF_API void sf_poly_free(sf_poly* poly);
/* Returned strings are released with sf_string_free. */
SF_API sf_status sf_poly_print(const sf_poly* poly, char** out);
/* Operands must live in the same ring. */
SF_API sf_status sf_poly_add(const sf_poly* a, const sf_poly* b, sf_poly** out);
SF_API sf_status sf_poly_mul(const sf_poly* a, const sf_poly* b, sf_poly** out);
SF_API sf_status sf_poly_derivative(const sf_poly* p, const char* var, sf_poly** out);
SF_API void sf_string_free(char* s);

SF_API sf_status sf_job_create(const char* command, sf_job** out);
SF_API void sf_job_destroy(sf_job* job);
/* Keys as the CLI flags without dashes: field, seed, trials, max-basis,
   max-pair-deg, out, k, plane, point, lambda, direction, vars, primes, p, n,
   table, max-len, s. */
SF_API sf_status sf_job_set_option(sf_job* job, const char* key, const char* value);
SF_API sf_status sf_job_add_polynomial(sf_job* job, const char* text);
SF_API sf_status sf_job_add_argument(sf_job* job, const char* arg);
/* Always produces a report when the arguments are valid; the report's exit
   code carries the job outcome. */
SF_API sf_status sf_job_run(const sf_job* job, sf_report** out);

SF_API int sf_report_exit_code(const sf_report* report);
/* Owned by the report. */
SF_API const char* sf_report_json(const sf_report* report);
SF_API const char* sf_report_text(const sf_report* report);
SF_API void sf_report_destroy(sf_report* report);

#ifdef __cplusplus
}
#endif

#endif
