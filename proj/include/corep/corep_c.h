/* C interface to the corep shared library.
 *
 * All functions are thread-compatible: handles are immutable after creation
 * except through the setters below, and error messages are thread-local.
 * Every object returned through an out-parameter must be released with the
 * matching *_free function.
 */

#ifndef COREP_C_H
#define COREP_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corep_status {
    COREP_OK = 0,
    COREP_ERR_INVALID_ARGUMENT = 1,
    COREP_ERR_PARSE = 2,
    COREP_ERR_IO = 3,
    COREP_ERR_NUMERIC = 4,        /* singular / ill-conditioned matrix */
    COREP_ERR_STRUCTURE = 5,      /* group or corep structural failure */
    COREP_ERR_CLASSIFICATION = 6, /* indeterminate type or failed reduction */
    COREP_ERR_INTERNAL = 7
} corep_status;

/* Opaque handles. */
typedef struct corep_problem corep_problem;
typedef struct corep_report corep_report;

const char* corep_version_string(void);
const char* corep_status_name(corep_status status);

/* Message describing the most recent failure on this thread; never NULL. */
const char* corep_last_error(void);

/* --- problems ---------------------------------------------------------- */

corep_status corep_problem_from_string(const char* json_text, corep_problem** out);
corep_status corep_problem_from_file(const char* path, corep_problem** out);
void corep_problem_free(corep_problem* problem);

corep_status corep_problem_set_tolerance(corep_problem* problem,
                                         double abs_eps, double rel_eps);
corep_status corep_problem_set_seed(corep_problem* problem,
                                    unsigned long long seed);
corep_status corep_problem_set_sample_count(corep_problem* problem, size_t count);
corep_status corep_problem_set_phases(corep_problem* problem,
                                      double xi, double alpha0);

/* --- running ----------------------------------------------------------- */

/* verb is one of "verify", "classify", "build", "reduce". */
corep_status corep_run(const corep_problem* problem, const char* verb,
                       corep_report** out);

/* --- reports ----------------------------------------------------------- */

/* 1 when every irrep completed and every verification passed, else 0. */
int corep_report_passed(const corep_report* report);

size_t corep_report_entry_count(const corep_report* report);

/* Label of entry `index`; the string must be freed with corep_free_string. */
corep_status corep_report_entry_label(const corep_report* report, size_t index,
                                      char** out);

/* Assigned type letter 'a', 'b' or 'c'; '\0' when the entry has no
 * classification (errored, or the verb stopped before classify). */
corep_status corep_report_entry_type(const corep_report* report, size_t index,
                                     char* out);

/* format is "text" or "structured"; the string must be freed with
 * corep_free_string. */
corep_status corep_report_render(const corep_report* report, const char* format,
                                 char** out);

void corep_report_free(corep_report* report);
void corep_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* COREP_C_H */
