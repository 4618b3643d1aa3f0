#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "source_span.hpp"

namespace miniproc {

enum class PrimOp { Add, Sub, Mul, Lt };

std::string_view prim_op_name(PrimOp op);
std::optional<PrimOp> prim_op_from_name(std::string_view name);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumExpr {
  std::int64_t value = 0;
};

struct VarExpr {
  std::string name;
};

struct CallExpr {
  std::string callee;
  std::vector<ExprPtr> args;
};

// Primitive application always has exactly two operands.
struct PrimExpr {
  PrimOp op = PrimOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct LetBinding {
  std::string name;
  SourceSpan name_span;
  ExprPtr init;
};

// bindings is nonempty; each init sees the bindings before it.
struct LetExpr {
  std::vector<LetBinding> bindings;
  ExprPtr body;
};

struct IfExpr {
  ExprPtr cond;
  ExprPtr then_branch;
  ExprPtr else_branch;
};

struct Expr {
  std::variant<NumExpr, VarExpr, CallExpr, PrimExpr, LetExpr, IfExpr> node;
  SourceSpan span;
};

struct Param {
  std::string name;
  SourceSpan span;
};

struct ProcedureDecl {
  std::string name;
  SourceSpan name_span;
  std::vector<Param> params;
  ExprPtr body;
  SourceSpan span;
};

// Declaration order is source order and is preserved by the pretty printer.
struct Program {
  std::vector<ProcedureDecl> procedures;
  SourceSpan span;
};

// First declaration with the given name, or nullptr.
const ProcedureDecl* find_procedure(const Program& program, std::string_view name);

// Equality of shape, names, operators, and literal values; spans are ignored.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Program& a, const Program& b);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace miniproc
