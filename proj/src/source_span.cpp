#include "source_span.hpp"

namespace miniproc {

namespace {

bool before(int line_a, int col_a, int line_b, int col_b) {
  return line_a < line_b || (line_a == line_b && col_a < col_b);
}

}  // namespace

SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  if (before(b.start_line, b.start_col, out.start_line, out.start_col)) {
    out.start_line = b.start_line;
    out.start_col = b.start_col;
  }
  if (before(out.end_line, out.end_col, b.end_line, b.end_col)) {
    out.end_line = b.end_line;
    out.end_col = b.end_col;
  }
  return out;
}

std::string to_string(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" + std::to_string(span.start_col) +
         "-" + std::to_string(span.end_line) + ":" + std::to_string(span.end_col);
}

}  // namespace miniproc
