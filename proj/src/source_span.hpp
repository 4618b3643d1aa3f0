#pragma once

#include <string>

namespace miniproc {

// Half-open in spirit but stored inclusive: start is the first character of
// the construct, end is its last character. Lines and columns are 1-based;
// columns count bytes.
struct SourceSpan {
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Smallest span covering both a and b.
SourceSpan merge(const SourceSpan& a, const SourceSpan& b);

// "start_line:start_col-end_line:end_col", for debugging output.
std::string to_string(const SourceSpan& span);

}  // namespace miniproc
