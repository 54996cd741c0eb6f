/* C interface to the folham library. All objects are opaque handles; every
 * fallible call returns a folham_status and leaves a message retrievable
 * with folham_last_error() on the calling thread. */
#ifndef FOLHAM_H
#define FOLHAM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FOLHAM_API __declspec(dllexport)
#else
#define FOLHAM_API __attribute__((visibility("default")))
#endif

typedef enum folham_status {
    FOLHAM_OK = 0,
    FOLHAM_INPUT_ERROR = 2,
    FOLHAM_INTERNAL_ERROR = 3,
    FOLHAM_INVALID_ARGUMENT = 4
} folham_status;

typedef struct folham_spec folham_spec;
typedef struct folham_report folham_report;

/* Message of the last failed call on this thread, or "" if none. */
FOLHAM_API const char* folham_last_error(void);

/* Spec loading. A report document is accepted too; its embedded spec is used. */
FOLHAM_API folham_status folham_spec_load_file(const char* path, folham_spec** out);
FOLHAM_API folham_status folham_spec_load_string(const char* json, folham_spec** out);
/* Canonical JSON of the spec; release with folham_string_free. */
FOLHAM_API folham_status folham_spec_to_json(const folham_spec* spec, char** out);
/* 1 if both specs describe identical objects. */
FOLHAM_API int folham_spec_equal(const folham_spec* a, const folham_spec* b);
/* Exit code the spec expects from verify, or -1 if it states none. */
FOLHAM_API int folham_spec_expected(const folham_spec* spec);
FOLHAM_API void folham_spec_free(folham_spec* spec);

/* Commands. Input errors do not fail the call: they are recorded in the
 * report, whose exit code is then 2. */
FOLHAM_API folham_status folham_verify(const folham_spec* spec, folham_report** out);
FOLHAM_API folham_status folham_classify(const folham_spec* spec, folham_report** out);
FOLHAM_API folham_status folham_bracket(const folham_spec* spec, const char* f, const char* g, int extended,
                                        folham_report** out);
/* theory: "twisted", "lp-basic" or "basic-derham". */
FOLHAM_API folham_status folham_cohomology(const folham_spec* spec, const char* theory, int k, int max_degree,
                                           folham_report** out);
/* A report carrying only an input error (exit code 2). */
FOLHAM_API folham_status folham_error_report(const char* message, folham_report** out);

/* Strings below are owned by the report. */
FOLHAM_API const char* folham_report_json(const folham_report* report);
FOLHAM_API const char* folham_report_text(const folham_report* report);
/* 0 all checks pass, 1 a check failed, 2 input error. */
FOLHAM_API int folham_report_exit_code(const folham_report* report);
FOLHAM_API void folham_report_free(folham_report* report);

/* Bundled example corpus. Strings are static. */
FOLHAM_API size_t folham_corpus_count(void);
FOLHAM_API const char* folham_corpus_name(size_t index);
FOLHAM_API const char* folham_corpus_json(size_t index);

FOLHAM_API void folham_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
