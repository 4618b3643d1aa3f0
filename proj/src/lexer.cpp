#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <unordered_map>

namespace miniproc {

namespace {

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
  static const std::unordered_map<std::string_view, TokenKind> table = {
      {"program", TokenKind::KwProgram}, {"procedure", TokenKind::KwProcedure},
      {"call", TokenKind::KwCall},       {"let", TokenKind::KwLet},
      {"in", TokenKind::KwIn},           {"if", TokenKind::KwIf},
      {"then", TokenKind::KwThen},       {"else", TokenKind::KwElse},
  };
  return table;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  Expected<std::vector<Token>> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        tokens.push_back({TokenKind::Eof, "", {line_, col_, line_, col_}});
        return tokens;
      }
      mark_start();
      char c = peek();
      if (is_letter(c)) {
        tokens.push_back(lex_ident());
        continue;
      }
      if (is_digit(c)) {
        Token tok;
        if (Diagnostic* err = lex_number(tok)) return *err;
        tokens.push_back(std::move(tok));
        continue;
      }
      TokenKind kind;
      switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '{': kind = TokenKind::LBrace; break;
        case '}': kind = TokenKind::RBrace; break;
        case ',': kind = TokenKind::Comma; break;
        case '=': kind = TokenKind::Equals; break;
        default:
          advance();
          return unexpected_character(c);
      }
      advance();
      tokens.push_back({kind, "", span_from_start()});
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char peek_next() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

  void advance() {
    last_line_ = line_;
    last_col_ = col_;
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void mark_start() {
    start_line_ = line_;
    start_col_ = col_;
    start_pos_ = pos_;
  }

  SourceSpan span_from_start() const {
    return {start_line_, start_col_, last_line_, last_col_};
  }

  void skip_trivia() {
    for (;;) {
      if (at_end()) return;
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '/' && peek_next() == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token lex_ident() {
    advance();
    while (!at_end() && (is_letter(peek()) || is_digit(peek()))) advance();
    if (!at_end() && peek() == '?') advance();
    std::string text(src_.substr(start_pos_, pos_ - start_pos_));
    auto it = keyword_table().find(text);
    if (it != keyword_table().end()) {
      return {it->second, "", span_from_start()};
    }
    return {TokenKind::Ident, std::move(text), span_from_start()};
  }

  // Returns nullptr on success; otherwise err_ holds the diagnostic.
  Diagnostic* lex_number(Token& out) {
    while (!at_end() && is_digit(peek())) advance();
    std::string digits(src_.substr(start_pos_, pos_ - start_pos_));
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range || ptr != digits.data() + digits.size()) {
      err_ = {Severity::Error, "NUMBER_OVERFLOW",
              "integer literal '" + digits + "' exceeds the signed 64-bit range",
              span_from_start()};
      return &err_;
    }
    out = {TokenKind::Number, std::move(digits), span_from_start()};
    return nullptr;
  }

  Diagnostic unexpected_character(char c) const {
    std::string what;
    if (std::isprint(static_cast<unsigned char>(c))) {
      what = std::string("'") + c + "'";
    } else {
      char buf[16];
      std::snprintf(buf, sizeof buf, "byte 0x%02X",
                    static_cast<unsigned>(static_cast<unsigned char>(c)));
      what = buf;
    }
    return {Severity::Error, "UNEXPECTED_CHARACTER",
            "unexpected character " + what, span_from_start()};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  int last_line_ = 1, last_col_ = 1;
  int start_line_ = 1, start_col_ = 1;
  std::size_t start_pos_ = 0;
  Diagnostic err_;
};

}  // namespace

Expected<std::vector<Token>> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace miniproc
