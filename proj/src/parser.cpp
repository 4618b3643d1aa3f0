#include "parser.hpp"

#include <charconv>
#include <utility>

#include "lexer.hpp"

namespace miniproc {

namespace {

// Thrown on the first syntax error and converted to Expected at the boundary.
struct ParseFailure {
  Diagnostic diagnostic;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  Program parse_program() {
    const Token& kw = expect(TokenKind::KwProgram);
    expect(TokenKind::LBrace);
    Program program;
    for (;;) {
      if (check(TokenKind::KwProcedure)) {
        program.procedures.push_back(parse_procedure());
      } else if (check(TokenKind::RBrace)) {
        break;
      } else {
        fail("'procedure' or '}'");
      }
    }
    const Token& close = expect(TokenKind::RBrace);
    expect(TokenKind::Eof, "end of input after the closing '}' of 'program'");
    program.span = merge(kw.span, close.span);
    return program;
  }

 private:
  ProcedureDecl parse_procedure() {
    const Token& kw = expect(TokenKind::KwProcedure);
    const Token& name = expect(TokenKind::Ident, "procedure name");
    ProcedureDecl decl;
    decl.name = name.text;
    decl.name_span = name.span;
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      for (;;) {
        const Token& param = expect(TokenKind::Ident, "parameter name");
        decl.params.push_back({param.text, param.span});
        if (!match(TokenKind::Comma)) break;
      }
    }
    expect(TokenKind::RParen, "',' or ')' in the parameter list");
    expect(TokenKind::LBrace);
    decl.body = parse_expr();
    const Token& close = expect(TokenKind::RBrace, "'}' after the procedure body");
    decl.span = merge(kw.span, close.span);
    return decl;
  }

  ExprPtr parse_expr() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number:
        return parse_number();
      case TokenKind::Ident:
        if (tok.text == "lt?" && peek_next().kind == TokenKind::LParen) {
          return parse_prim(PrimOp::Lt);
        }
        advance();
        return make_expr(VarExpr{tok.text}, tok.span);
      case TokenKind::Plus:
        return parse_prim(PrimOp::Add);
      case TokenKind::Minus:
        return parse_prim(PrimOp::Sub);
      case TokenKind::Star:
        return parse_prim(PrimOp::Mul);
      case TokenKind::KwCall:
        return parse_call();
      case TokenKind::KwLet:
        return parse_let();
      case TokenKind::KwIf:
        return parse_if();
      default:
        fail("an expression: number, identifier, 'call', 'let', 'if', "
             "'+', '-', '*' or 'lt?'");
    }
  }

  ExprPtr parse_number() {
    const Token& tok = expect(TokenKind::Number);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      throw ParseFailure{{Severity::Error, "NUMBER_OVERFLOW",
                          "integer literal '" + tok.text +
                              "' exceeds the signed 64-bit range",
                          tok.span}};
    }
    return make_expr(NumExpr{value}, tok.span);
  }

  ExprPtr parse_prim(PrimOp op) {
    const Token& head = peek();
    advance();
    expect(TokenKind::LParen,
           std::string("'(' after '") + std::string(prim_op_name(op)) + "'");
    PrimExpr prim;
    prim.op = op;
    prim.lhs = parse_expr();
    expect(TokenKind::Comma, "',' between the two operands");
    prim.rhs = parse_expr();
    const Token& close = expect(TokenKind::RParen, "')' after the second operand");
    return make_expr(std::move(prim), merge(head.span, close.span));
  }

  ExprPtr parse_call() {
    const Token& kw = expect(TokenKind::KwCall);
    const Token& name = expect(TokenKind::Ident, "procedure name after 'call'");
    CallExpr call;
    call.callee = name.text;
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      for (;;) {
        call.args.push_back(parse_expr());
        if (!match(TokenKind::Comma)) break;
      }
    }
    const Token& close = expect(TokenKind::RParen, "',' or ')' in the argument list");
    return make_expr(std::move(call), merge(kw.span, close.span));
  }

  ExprPtr parse_let() {
    const Token& kw = expect(TokenKind::KwLet);
    LetExpr let;
    for (;;) {
      const Token& name = expect(TokenKind::Ident, "binding name after 'let'");
      expect(TokenKind::Equals, "'=' after the binding name");
      LetBinding binding;
      binding.name = name.text;
      binding.name_span = name.span;
      binding.init = parse_expr();
      let.bindings.push_back(std::move(binding));
      if (!match(TokenKind::Comma)) break;
    }
    expect(TokenKind::KwIn, "',' or 'in' after a let binding");
    let.body = parse_expr();
    SourceSpan span = merge(kw.span, let.body->span);
    return make_expr(std::move(let), span);
  }

  ExprPtr parse_if() {
    const Token& kw = expect(TokenKind::KwIf);
    IfExpr node;
    node.cond = parse_expr();
    expect(TokenKind::KwThen, "'then' after the condition");
    node.then_branch = parse_expr();
    expect(TokenKind::KwElse, "'else' after the then-branch");
    node.else_branch = parse_expr();
    SourceSpan span = merge(kw.span, node.else_branch->span);
    return make_expr(std::move(node), span);
  }

  static ExprPtr make_expr(auto node, SourceSpan span) {
    auto expr = std::make_unique<Expr>();
    expr->node = std::move(node);
    expr->span = span;
    return expr;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek_next() const {
    return pos_ + 1 < tokens_.size() ? tokens_[pos_ + 1] : tokens_.back();
  }

  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  bool check(TokenKind kind) const { return peek().kind == kind; }

  bool match(TokenKind kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  const Token& expect(TokenKind kind, std::string what = {}) {
    if (!check(kind)) {
      fail(what.empty() ? std::string(token_kind_name(kind)) : what);
    }
    const Token& tok = peek();
    if (kind != TokenKind::Eof) advance();
    return tok;
  }

  [[noreturn]] void fail(std::string expected) const {
    const Token& found = peek();
    throw ParseFailure{{Severity::Error, "UNEXPECTED_TOKEN",
                        "expected " + expected + ", found " + describe(found),
                        found.span}};
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expected<Program> parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    return Diagnostic{Severity::Error, "UNEXPECTED_TOKEN",
                      "token stream does not end with end-of-input", {}};
  }
  try {
    return Parser(tokens).parse_program();
  } catch (const ParseFailure& failure) {
    return failure.diagnostic;
  }
}

Expected<Program> parse_source(std::string_view source) {
  Expected<std::vector<Token>> tokens = tokenize(source);
  if (!tokens.ok()) return tokens.error();
  return parse(tokens.value());
}

}  // namespace miniproc
