#pragma once

#include <string>
#include <string_view>

#include "source_span.hpp"

namespace miniproc {

enum class TokenKind {
  KwProgram,
  KwProcedure,
  KwCall,
  KwLet,
  KwIn,
  KwIf,
  KwThen,
  KwElse,
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Equals,
  Eof,
};

// text holds the identifier name or the literal digits; empty for every
// other kind.
struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

// Display name for diagnostics: "'program'", "identifier", "number",
// "'('", "end of input", ...
std::string_view token_kind_name(TokenKind kind);

// Diagnostic-friendly rendering of a concrete token, e.g. "identifier 'lt?'".
std::string describe(const Token& token);

// letter, then letters/digits, then at most one trailing '?'.
bool is_valid_identifier(std::string_view text);

// Keywords plus the primitive name "lt?"; none of these may name a
// procedure, parameter, or let binding.
bool is_reserved_name(std::string_view text);

}  // namespace miniproc
