#include "miniproc.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "ast.hpp"
#include "diagnostic.hpp"
#include "interp.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "token.hpp"
#include "value.hpp"

struct mp_program {
  miniproc::Program ast;
  bool has_ast = false;
  std::vector<miniproc::Diagnostic> diagnostics;
  mp_status status = MP_OK;
};

struct mp_report {
  miniproc::AnalysisReport report;
};

struct mp_outcome {
  miniproc::RunResult result;
  std::string error_kind;
};

namespace {

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

mp_span to_c_span(const miniproc::SourceSpan& span) {
  return {span.start_line, span.start_col, span.end_line, span.end_col};
}

void fill_diagnostic(const miniproc::Diagnostic& diagnostic, mp_diagnostic* out) {
  out->severity = diagnostic.severity == miniproc::Severity::Error
                      ? MP_SEVERITY_ERROR
                      : MP_SEVERITY_WARNING;
  out->code = diagnostic.code.c_str();
  out->message = diagnostic.message.c_str();
  out->span = to_c_span(diagnostic.span);
}

const char* entry_or_default(const char* entry) {
  return entry == nullptr ? "main" : entry;
}

}  // namespace

extern "C" {

const char* mp_version(void) { return "0.1.0"; }

int mp_is_valid_identifier(const char* name) {
  if (name == nullptr) return 0;
  std::string_view text(name);
  if (!miniproc::is_valid_identifier(text)) return 0;
  if (text != "lt?" && miniproc::is_reserved_name(text)) return 0;
  return 1;
}

mp_program* mp_compile(const char* source, size_t len) {
  if (source == nullptr) return nullptr;
  auto* program = new mp_program;
  miniproc::Expected<miniproc::Program> parsed =
      miniproc::parse_source(std::string_view(source, len));
  if (parsed.ok()) {
    program->ast = std::move(parsed.value());
    program->has_ast = true;
  } else {
    program->diagnostics.push_back(parsed.error());
    program->status = MP_ERR_SYNTAX;
  }
  return program;
}

void mp_program_free(mp_program* program) { delete program; }

mp_status mp_program_status(const mp_program* program) {
  return program == nullptr ? MP_ERR_ARGUMENT : program->status;
}

size_t mp_program_diagnostic_count(const mp_program* program) {
  return program == nullptr ? 0 : program->diagnostics.size();
}

int mp_program_diagnostic(const mp_program* program, size_t index,
                          mp_diagnostic* out) {
  if (program == nullptr || out == nullptr) return 0;
  if (index >= program->diagnostics.size()) return 0;
  fill_diagnostic(program->diagnostics[index], out);
  return 1;
}

char* mp_program_diagnostics_text(const mp_program* program) {
  if (program == nullptr) return nullptr;
  return dup_string(miniproc::render_all(program->diagnostics));
}

char* mp_program_ast_dump(const mp_program* program) {
  if (program == nullptr || !program->has_ast) return nullptr;
  return dup_string(miniproc::ast_dump(program->ast));
}

char* mp_program_pretty(const mp_program* program) {
  if (program == nullptr || !program->has_ast) return nullptr;
  return dup_string(miniproc::pretty_print(program->ast));
}

size_t mp_program_procedure_count(const mp_program* program) {
  if (program == nullptr || !program->has_ast) return 0;
  return program->ast.procedures.size();
}

const char* mp_program_procedure_name(const mp_program* program, size_t index) {
  if (program == nullptr || !program->has_ast) return nullptr;
  if (index >= program->ast.procedures.size()) return nullptr;
  return program->ast.procedures[index].name.c_str();
}

mp_report* mp_check(const mp_program* program, const char* entry) {
  if (program == nullptr || !program->has_ast) return nullptr;
  const char* name = entry_or_default(entry);
  if (!mp_is_valid_identifier(name)) return nullptr;
  return new mp_report{miniproc::analyze(program->ast, name)};
}

void mp_report_free(mp_report* report) { delete report; }

int mp_report_has_errors(const mp_report* report) {
  return report != nullptr && report->report.has_errors() ? 1 : 0;
}

int mp_report_has_warnings(const mp_report* report) {
  return report != nullptr && report->report.has_warnings() ? 1 : 0;
}

size_t mp_report_diagnostic_count(const mp_report* report) {
  return report == nullptr ? 0 : report->report.diagnostics.size();
}

int mp_report_diagnostic(const mp_report* report, size_t index,
                         mp_diagnostic* out) {
  if (report == nullptr || out == nullptr) return 0;
  if (index >= report->report.diagnostics.size()) return 0;
  fill_diagnostic(report->report.diagnostics[index], out);
  return 1;
}

char* mp_report_text(const mp_report* report) {
  if (report == nullptr) return nullptr;
  return dup_string(miniproc::render_all(report->report.diagnostics));
}

int mp_report_is_reachable(const mp_report* report, const char* name) {
  if (report == nullptr || name == nullptr) return 0;
  return report->report.reachable.contains(name) ? 1 : 0;
}

mp_outcome* mp_run(const mp_program* program, const mp_run_options* options) {
  if (program == nullptr || !program->has_ast) return nullptr;
  miniproc::RunOptions run;
  run.entry = entry_or_default(options == nullptr ? nullptr : options->entry);
  if (!mp_is_valid_identifier(run.entry.c_str())) return nullptr;
  if (options != nullptr) {
    if (options->fuel > 0) run.fuel = options->fuel;
    run.trace = options->trace != 0;
    if (run.trace && options->trace_fn != nullptr) {
      mp_trace_fn fn = options->trace_fn;
      void* user_data = options->trace_user_data;
      run.trace_sink = [fn, user_data](std::string_view line) {
        std::string owned(line);
        fn(owned.c_str(), owned.size(), user_data);
      };
    }
  }
  auto* outcome = new mp_outcome{miniproc::eval_program(program->ast, run), {}};
  if (outcome->result.error) {
    outcome->error_kind = miniproc::to_string(outcome->result.error->kind);
  }
  return outcome;
}

void mp_outcome_free(mp_outcome* outcome) { delete outcome; }

mp_status mp_outcome_status(const mp_outcome* outcome) {
  if (outcome == nullptr) return MP_ERR_ARGUMENT;
  return outcome->result.ok() ? MP_OK : MP_ERR_RUNTIME;
}

int mp_outcome_value(const mp_outcome* outcome, mp_value* out) {
  if (outcome == nullptr || out == nullptr || !outcome->result.ok()) return 0;
  const miniproc::Value& value = *outcome->result.value;
  if (value.is_int()) {
    out->kind = MP_VALUE_INT;
    out->int_value = value.as_int();
    out->bool_value = 0;
  } else {
    out->kind = MP_VALUE_BOOL;
    out->int_value = 0;
    out->bool_value = value.as_bool() ? 1 : 0;
  }
  return 1;
}

void mp_outcome_stats(const mp_outcome* outcome, mp_exec_stats* out) {
  if (out == nullptr) return;
  if (outcome == nullptr) {
    *out = {0, 0, 0};
    return;
  }
  out->calls_made = outcome->result.stats.calls_made;
  out->prim_ops = outcome->result.stats.prim_ops;
  out->max_control_depth = outcome->result.stats.max_control_depth;
}

int mp_outcome_error(const mp_outcome* outcome, mp_runtime_error* out) {
  if (outcome == nullptr || out == nullptr || !outcome->result.error) return 0;
  const miniproc::RuntimeError& error = *outcome->result.error;
  out->kind = outcome->error_kind.c_str();
  out->message = error.message.c_str();
  out->span = to_c_span(error.span);
  return 1;
}

size_t mp_outcome_trace_depth(const mp_outcome* outcome) {
  if (outcome == nullptr || !outcome->result.error) return 0;
  return outcome->result.error->call_trace.size();
}

int mp_outcome_trace_frame(const mp_outcome* outcome, size_t index,
                           const char** procedure, mp_span* span) {
  if (outcome == nullptr || !outcome->result.error) return 0;
  const auto& trace = outcome->result.error->call_trace;
  if (index >= trace.size()) return 0;
  if (procedure != nullptr) *procedure = trace[index].procedure.c_str();
  if (span != nullptr) *span = to_c_span(trace[index].span);
  return 1;
}

char* mp_outcome_error_text(const mp_outcome* outcome) {
  if (outcome == nullptr || !outcome->result.error) return nullptr;
  return dup_string(miniproc::render(*outcome->result.error));
}

char* mp_value_text(const mp_value* value) {
  if (value == nullptr) return nullptr;
  if (value->kind == MP_VALUE_BOOL) {
    return dup_string(value->bool_value ? "true" : "false");
  }
  return dup_string(std::to_string(value->int_value));
}

void mp_string_free(char* text) { std::free(text); }

}  // extern "C"
