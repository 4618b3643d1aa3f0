#include "ast.hpp"

namespace miniproc {

std::string_view prim_op_name(PrimOp op) {
  switch (op) {
    case PrimOp::Add: return "+";
    case PrimOp::Sub: return "-";
    case PrimOp::Mul: return "*";
    case PrimOp::Lt: return "lt?";
  }
  return "?";
}

std::optional<PrimOp> prim_op_from_name(std::string_view name) {
  if (name == "+") return PrimOp::Add;
  if (name == "-") return PrimOp::Sub;
  if (name == "*") return PrimOp::Mul;
  if (name == "lt?") return PrimOp::Lt;
  return std::nullopt;
}

const ProcedureDecl* find_procedure(const Program& program, std::string_view name) {
  for (const ProcedureDecl& proc : program.procedures) {
    if (proc.name == name) return &proc;
  }
  return nullptr;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NumExpr& x) {
            return x.value == std::get<NumExpr>(b.node).value;
          },
          [&](const VarExpr& x) {
            return x.name == std::get<VarExpr>(b.node).name;
          },
          [&](const CallExpr& x) {
            const auto& y = std::get<CallExpr>(b.node);
            if (x.callee != y.callee || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i) {
              if (!structurally_equal(*x.args[i], *y.args[i])) return false;
            }
            return true;
          },
          [&](const PrimExpr& x) {
            const auto& y = std::get<PrimExpr>(b.node);
            return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                   structurally_equal(*x.rhs, *y.rhs);
          },
          [&](const LetExpr& x) {
            const auto& y = std::get<LetExpr>(b.node);
            if (x.bindings.size() != y.bindings.size()) return false;
            for (std::size_t i = 0; i < x.bindings.size(); ++i) {
              if (x.bindings[i].name != y.bindings[i].name ||
                  !structurally_equal(*x.bindings[i].init, *y.bindings[i].init)) {
                return false;
              }
            }
            return structurally_equal(*x.body, *y.body);
          },
          [&](const IfExpr& x) {
            const auto& y = std::get<IfExpr>(b.node);
            return structurally_equal(*x.cond, *y.cond) &&
                   structurally_equal(*x.then_branch, *y.then_branch) &&
                   structurally_equal(*x.else_branch, *y.else_branch);
          },
      },
      a.node);
}

bool structurally_equal(const Program& a, const Program& b) {
  if (a.procedures.size() != b.procedures.size()) return false;
  for (std::size_t i = 0; i < a.procedures.size(); ++i) {
    const ProcedureDecl& pa = a.procedures[i];
    const ProcedureDecl& pb = b.procedures[i];
    if (pa.name != pb.name || pa.params.size() != pb.params.size()) return false;
    for (std::size_t j = 0; j < pa.params.size(); ++j) {
      if (pa.params[j].name != pb.params[j].name) return false;
    }
    if (!structurally_equal(*pa.body, *pb.body)) return false;
  }
  return true;
}

}  // namespace miniproc
