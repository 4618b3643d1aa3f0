#include "token.hpp"

#include <array>

namespace miniproc {

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "program", "procedure", "call", "let", "in", "if", "then", "else"};

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwProgram: return "'program'";
    case TokenKind::KwProcedure: return "'procedure'";
    case TokenKind::KwCall: return "'call'";
    case TokenKind::KwLet: return "'let'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwThen: return "'then'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Equals: return "'='";
    case TokenKind::Eof: return "end of input";
  }
  return "<token>";
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Ident:
      return "identifier '" + token.text + "'";
    case TokenKind::Number:
      return "number '" + token.text + "'";
    default:
      return std::string(token_kind_name(token.kind));
  }
}

bool is_valid_identifier(std::string_view text) {
  if (text.empty() || !is_letter(text.front())) return false;
  std::size_t i = 1;
  while (i < text.size() && (is_letter(text[i]) || is_digit(text[i]))) ++i;
  if (i < text.size() && text[i] == '?') ++i;
  return i == text.size();
}

bool is_reserved_name(std::string_view text) {
  if (text == "lt?") return true;
  for (std::string_view kw : kKeywords) {
    if (text == kw) return true;
  }
  return false;
}

}  // namespace miniproc
