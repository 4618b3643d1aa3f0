#include "diagnostic.hpp"

namespace miniproc {

std::string render(const Diagnostic& diagnostic) {
  std::string out = diagnostic.severity == Severity::Error ? "error" : "warning";
  out += ' ';
  out += diagnostic.code;
  out += ' ';
  out += std::to_string(diagnostic.span.start_line);
  out += ':';
  out += std::to_string(diagnostic.span.start_col);
  out += ": ";
  out += diagnostic.message;
  return out;
}

std::string render_all(std::span<const Diagnostic> diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    out += render(d);
    out += '\n';
  }
  return out;
}

}  // namespace miniproc
