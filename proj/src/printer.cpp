#include "printer.hpp"

namespace miniproc {

namespace {

void emit_inline(const Expr& e, std::string& out);

void emit_args_inline(const std::vector<ExprPtr>& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    emit_inline(*args[i], out);
  }
  out += ')';
}

void emit_inline(const Expr& e, std::string& out) {
  std::visit(
      overloaded{
          [&](const NumExpr& n) { out += std::to_string(n.value); },
          [&](const VarExpr& v) { out += v.name; },
          [&](const CallExpr& c) {
            out += "call ";
            out += c.callee;
            emit_args_inline(c.args, out);
          },
          [&](const PrimExpr& p) {
            out += prim_op_name(p.op);
            out += '(';
            emit_inline(*p.lhs, out);
            out += ',';
            emit_inline(*p.rhs, out);
            out += ')';
          },
          [&](const LetExpr& l) {
            out += "let ";
            for (std::size_t i = 0; i < l.bindings.size(); ++i) {
              if (i > 0) out += ", ";
              out += l.bindings[i].name;
              out += " = ";
              emit_inline(*l.bindings[i].init, out);
            }
            out += " in ";
            emit_inline(*l.body, out);
          },
          [&](const IfExpr& i) {
            out += "if ";
            emit_inline(*i.cond, out);
            out += " then ";
            emit_inline(*i.then_branch, out);
            out += " else ";
            emit_inline(*i.else_branch, out);
          },
      },
      e.node);
}

void break_line(std::string& out, int col) {
  out += '\n';
  out.append(static_cast<std::size_t>(col), ' ');
}

// Multi-line layout: let and if start fresh lines, everything nested inside
// calls, primitive operands, and binding initializers stays on one line.
void emit_block(const Expr& e, int col, std::string& out) {
  std::visit(
      overloaded{
          [&](const LetExpr& l) {
            out += "let ";
            for (std::size_t i = 0; i < l.bindings.size(); ++i) {
              if (i > 0) {
                out += ',';
                break_line(out, col + 4);
              }
              out += l.bindings[i].name;
              out += " = ";
              emit_inline(*l.bindings[i].init, out);
            }
            break_line(out, col);
            out += "in ";
            emit_block(*l.body, col + 3, out);
          },
          [&](const IfExpr& i) {
            out += "if ";
            emit_inline(*i.cond, out);
            break_line(out, col);
            out += "then ";
            emit_block(*i.then_branch, col + 5, out);
            break_line(out, col);
            out += "else ";
            emit_block(*i.else_branch, col + 5, out);
          },
          [&](const auto&) { emit_inline(e, out); },
      },
      e.node);
}

void emit_sexpr(const Expr& e, std::string& out) {
  std::visit(
      overloaded{
          [&](const NumExpr& n) {
            out += "(num ";
            out += std::to_string(n.value);
            out += ')';
          },
          [&](const VarExpr& v) {
            out += "(var ";
            out += v.name;
            out += ')';
          },
          [&](const CallExpr& c) {
            out += "(call ";
            out += c.callee;
            for (const ExprPtr& arg : c.args) {
              out += ' ';
              emit_sexpr(*arg, out);
            }
            out += ')';
          },
          [&](const PrimExpr& p) {
            out += "(prim ";
            out += prim_op_name(p.op);
            out += ' ';
            emit_sexpr(*p.lhs, out);
            out += ' ';
            emit_sexpr(*p.rhs, out);
            out += ')';
          },
          [&](const LetExpr& l) {
            out += "(let (";
            for (std::size_t i = 0; i < l.bindings.size(); ++i) {
              if (i > 0) out += ' ';
              out += '(';
              out += l.bindings[i].name;
              out += ' ';
              emit_sexpr(*l.bindings[i].init, out);
              out += ')';
            }
            out += ") ";
            emit_sexpr(*l.body, out);
            out += ')';
          },
          [&](const IfExpr& i) {
            out += "(if ";
            emit_sexpr(*i.cond, out);
            out += ' ';
            emit_sexpr(*i.then_branch, out);
            out += ' ';
            emit_sexpr(*i.else_branch, out);
            out += ')';
          },
      },
      e.node);
}

}  // namespace

std::string pretty_print(const Program& program) {
  std::string out = "program {\n";
  for (const ProcedureDecl& proc : program.procedures) {
    out += "  procedure ";
    out += proc.name;
    out += '(';
    for (std::size_t i = 0; i < proc.params.size(); ++i) {
      if (i > 0) out += ',';
      out += proc.params[i].name;
    }
    out += ") {\n    ";
    emit_block(*proc.body, 4, out);
    out += "\n  }\n";
  }
  out += "}\n";
  return out;
}

std::string ast_dump(const Program& program) {
  std::string out = "(program\n";
  for (const ProcedureDecl& proc : program.procedures) {
    out += "  (procedure ";
    out += proc.name;
    out += " (";
    for (std::size_t i = 0; i < proc.params.size(); ++i) {
      if (i > 0) out += ' ';
      out += proc.params[i].name;
    }
    out += ") ";
    emit_sexpr(*proc.body, out);
    out += ")\n";
  }
  out += ")\n";
  return out;
}

}  // namespace miniproc
