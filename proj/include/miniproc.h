#ifndef MINIPROC_H
#define MINIPROC_H

/* C interface to the miniproc toolchain: compile source text, inspect
 * diagnostics, run static analysis, and evaluate programs.
 *
 * Handle lifetime: every mp_*_free takes the pointer returned by the
 * matching constructor and accepts NULL. Functions returning char* hand
 * ownership to the caller; release with mp_string_free. const char*
 * pointers inside result structs are borrowed and stay valid only while
 * the handle that produced them is alive.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mp_program mp_program;
typedef struct mp_report mp_report;
typedef struct mp_outcome mp_outcome;

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_ARGUMENT = 1,
  MP_ERR_SYNTAX = 2,
  MP_ERR_STATIC = 3,
  MP_ERR_RUNTIME = 4
} mp_status;

typedef enum mp_severity {
  MP_SEVERITY_ERROR = 0,
  MP_SEVERITY_WARNING = 1
} mp_severity;

/* 1-based lines and byte columns; end is the last byte of the construct. */
typedef struct mp_span {
  int start_line;
  int start_col;
  int end_line;
  int end_col;
} mp_span;

typedef struct mp_diagnostic {
  mp_severity severity;
  const char* code;
  const char* message;
  mp_span span;
} mp_diagnostic;

typedef enum mp_value_kind {
  MP_VALUE_INT = 0,
  MP_VALUE_BOOL = 1
} mp_value_kind;

typedef struct mp_value {
  mp_value_kind kind;
  int64_t int_value; /* set when kind == MP_VALUE_INT */
  int bool_value;    /* set when kind == MP_VALUE_BOOL */
} mp_value;

typedef struct mp_exec_stats {
  uint64_t calls_made;
  uint64_t prim_ops;
  uint64_t max_control_depth;
} mp_exec_stats;

typedef struct mp_runtime_error {
  const char* kind; /* "TypeError", "IntegerOverflow", ... */
  const char* message;
  mp_span span;
} mp_runtime_error;

/* One trace line per procedure application, without a trailing newline. */
typedef void (*mp_trace_fn)(const char* line, size_t len, void* user_data);

typedef struct mp_run_options {
  const char* entry;    /* NULL selects "main" */
  uint64_t fuel;        /* upper bound on calls; 0 means unlimited */
  int trace;            /* nonzero emits one line per application */
  mp_trace_fn trace_fn; /* NULL routes trace lines to stderr */
  void* trace_user_data;
} mp_run_options;

const char* mp_version(void);

/* Nonzero when name could appear as an identifier token: a letter, then
 * letters or digits, at most one trailing '?', and not a keyword. */
int mp_is_valid_identifier(const char* name);

/* Tokenizes and parses len bytes of source. Returns NULL only when source
 * is NULL; lexical and syntax failures come back as a handle carrying
 * MP_ERR_SYNTAX plus one diagnostic. */
mp_program* mp_compile(const char* source, size_t len);
void mp_program_free(mp_program* program);
mp_status mp_program_status(const mp_program* program);
size_t mp_program_diagnostic_count(const mp_program* program);
int mp_program_diagnostic(const mp_program* program, size_t index,
                          mp_diagnostic* out);
char* mp_program_diagnostics_text(const mp_program* program);
char* mp_program_ast_dump(const mp_program* program);
char* mp_program_pretty(const mp_program* program);
size_t mp_program_procedure_count(const mp_program* program);
const char* mp_program_procedure_name(const mp_program* program, size_t index);

/* Static analysis of a successfully parsed program against an entry
 * procedure (NULL selects "main"). Returns NULL when the program handle
 * carries a syntax error or the entry name is not a valid identifier. */
mp_report* mp_check(const mp_program* program, const char* entry);
void mp_report_free(mp_report* report);
int mp_report_has_errors(const mp_report* report);
int mp_report_has_warnings(const mp_report* report);
size_t mp_report_diagnostic_count(const mp_report* report);
int mp_report_diagnostic(const mp_report* report, size_t index,
                         mp_diagnostic* out);
char* mp_report_text(const mp_report* report);
int mp_report_is_reachable(const mp_report* report, const char* name);

/* Evaluates the entry procedure. options may be NULL for defaults. Returns
 * NULL when the program handle carries a syntax error or the entry name is
 * not a valid identifier. Static errors are not re-checked here; run
 * mp_check first. */
mp_outcome* mp_run(const mp_program* program, const mp_run_options* options);
void mp_outcome_free(mp_outcome* outcome);
mp_status mp_outcome_status(const mp_outcome* outcome);
int mp_outcome_value(const mp_outcome* outcome, mp_value* out);
void mp_outcome_stats(const mp_outcome* outcome, mp_exec_stats* out);
int mp_outcome_error(const mp_outcome* outcome, mp_runtime_error* out);
size_t mp_outcome_trace_depth(const mp_outcome* outcome);
int mp_outcome_trace_frame(const mp_outcome* outcome, size_t index,
                           const char** procedure, mp_span* span);
char* mp_outcome_error_text(const mp_outcome* outcome);

/* Decimal for integers, "true"/"false" for booleans. */
char* mp_value_text(const mp_value* value);

void mp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* MINIPROC_H */
