#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "source_span.hpp"

namespace miniproc {

enum class Severity { Error, Warning };

// A single finding from the lexer, parser, or analyzer. `code` is a short
// stable identifier (UNBOUND_VAR, ARITY_MISMATCH, ...) scripts can match on.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "SEVERITY CODE line:col: message", e.g.
// "warning UNREACHABLE_PROC 21:12: procedure 'Abs' is unreachable from entry 'main'"
std::string render(const Diagnostic& diagnostic);

// One rendered line per diagnostic, each newline-terminated, in the order given.
std::string render_all(std::span<const Diagnostic> diagnostics);

// Minimal sum type for operations that produce either a value or a single
// diagnostic (the lexer and parser stop at the first error).
template <typename T>
class Expected {
 public:
  Expected(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Expected(Diagnostic error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<0>(data_); }
  const T& value() const { return std::get<0>(data_); }
  const Diagnostic& error() const { return std::get<1>(data_); }

 private:
  std::variant<T, Diagnostic> data_;
};

}  // namespace miniproc
