#include "interp.hpp"

#include <algorithm>
#include <iostream>
#include <utility>

namespace miniproc {

namespace {

std::string at(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" + std::to_string(span.start_col);
}

struct ErrorSignal {
  RuntimeError error;
};

class Interpreter {
 public:
  Interpreter(const Program& program, const RunOptions& options)
      : program_(program), options_(options) {}

  RunResult run() {
    RunResult result;
    try {
      result.value = start();
    } catch (ErrorSignal& signal) {
      result.error = std::move(signal.error);
    }
    result.stats = stats_;
    return result;
  }

  std::variant<Value, RuntimeError> eval_detached(const Expr& expr,
                                                 const Environment& env) {
    try {
      return eval_value(expr, env, 0);
    } catch (ErrorSignal& signal) {
      return std::move(signal.error);
    }
  }

 private:
  struct TailCall {
    const ProcedureDecl* proc;
    std::vector<Value> args;
    SourceSpan site;
  };
  using Step = std::variant<Value, TailCall>;

  class FrameScope {
   public:
    FrameScope(Interpreter& interp, std::string name, SourceSpan span)
        : interp_(interp) {
      interp_.frames_.push_back({std::move(name), span});
    }
    ~FrameScope() { interp_.frames_.pop_back(); }
    FrameScope(const FrameScope&) = delete;
    FrameScope& operator=(const FrameScope&) = delete;

   private:
    Interpreter& interp_;
  };

  [[noreturn]] void raise(RuntimeErrorKind kind, std::string message,
                          const SourceSpan& span) {
    RuntimeError error{kind, std::move(message), span, {}};
    error.call_trace.assign(frames_.rbegin(), frames_.rend());
    throw ErrorSignal{std::move(error)};
  }

  Value start() {
    const ProcedureDecl* entry = find_procedure(program_, options_.entry);
    if (entry == nullptr) {
      raise(RuntimeErrorKind::UnknownProcedure,
            "no procedure named '" + options_.entry + "'", program_.span);
    }
    if (!entry->params.empty()) {
      raise(RuntimeErrorKind::ArityMismatch,
            "procedure '" + entry->name + "' expects " +
                std::to_string(entry->params.size()) +
                (entry->params.size() == 1 ? " argument, got 0" : " arguments, got 0"),
            entry->name_span);
    }
    return apply(entry, {}, entry->name_span, 1);
  }

  void note_call(const ProcedureDecl& proc, const std::vector<Value>& args,
                 const SourceSpan& site, std::uint64_t depth) {
    if (options_.fuel && stats_.calls_made + 1 > *options_.fuel) {
      raise(RuntimeErrorKind::FuelExhausted,
            "fuel exhausted after " + std::to_string(*options_.fuel) + " calls",
            site);
    }
    ++stats_.calls_made;
    stats_.max_control_depth = std::max(stats_.max_control_depth, depth);
    if (options_.trace) {
      std::string line = "call " + proc.name + "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) line += ',';
        line += to_string(args[i]);
      }
      line += ") depth=" + std::to_string(depth);
      if (options_.trace_sink) {
        options_.trace_sink(line);
      } else {
        std::cerr << line << '\n' << std::flush;
      }
    }
  }

  Value apply(const ProcedureDecl* proc, std::vector<Value> args, SourceSpan site,
              std::uint64_t depth) {
    FrameScope frame(*this, proc->name, site);
    for (;;) {
      note_call(*proc, args, site, depth);
      if (args.size() != proc->params.size()) {
        raise(RuntimeErrorKind::ArityMismatch,
              "procedure '" + proc->name + "' expects " +
                  std::to_string(proc->params.size()) +
                  (proc->params.size() == 1 ? " argument, got " : " arguments, got ") +
                  std::to_string(args.size()),
              site);
      }
      Environment env;
      for (std::size_t i = 0; i < args.size(); ++i) {
        env = env.extended(proc->params[i].name, args[i]);
      }
      Step step = eval(*proc->body, env, depth, /*tail=*/true);
      if (Value* value = std::get_if<Value>(&step)) return *value;
      TailCall& tail = std::get<TailCall>(step);
      proc = tail.proc;
      args = std::move(tail.args);
      site = tail.site;
      frames_.back() = {proc->name, site};
    }
  }

  Value eval_value(const Expr& expr, const Environment& env, std::uint64_t depth) {
    return std::get<Value>(eval(expr, env, depth, /*tail=*/false));
  }

  Step eval(const Expr& expr, const Environment& env, std::uint64_t depth,
            bool tail) {
    return std::visit(
        overloaded{
            [&](const NumExpr& n) -> Step { return Value::from_int(n.value); },
            [&](const VarExpr& v) -> Step {
              const Value* found = env.lookup(v.name);
              if (found == nullptr) {
                raise(RuntimeErrorKind::UnboundVariable,
                      "unbound variable '" + v.name + "'", expr.span);
              }
              return *found;
            },
            [&](const CallExpr& c) -> Step {
              const ProcedureDecl* callee = find_procedure(program_, c.callee);
              if (callee == nullptr) {
                raise(RuntimeErrorKind::UnknownProcedure,
                      "call to undeclared procedure '" + c.callee + "'",
                      expr.span);
              }
              std::vector<Value> args;
              args.reserve(c.args.size());
              for (const ExprPtr& arg : c.args) {
                args.push_back(eval_value(*arg, env, depth));
              }
              if (tail) return TailCall{callee, std::move(args), expr.span};
              return apply(callee, std::move(args), expr.span, depth + 1);
            },
            [&](const PrimExpr& p) -> Step {
              Value lhs = eval_value(*p.lhs, env, depth);
              if (!lhs.is_int()) {
                raise(RuntimeErrorKind::TypeError,
                      std::string("'") + std::string(prim_op_name(p.op)) +
                          "' expects integer operands, got " +
                          kind_name(lhs.kind()),
                      p.lhs->span);
              }
              Value rhs = eval_value(*p.rhs, env, depth);
              if (!rhs.is_int()) {
                raise(RuntimeErrorKind::TypeError,
                      std::string("'") + std::string(prim_op_name(p.op)) +
                          "' expects integer operands, got " +
                          kind_name(rhs.kind()),
                      p.rhs->span);
              }
              ++stats_.prim_ops;
              std::int64_t a = lhs.as_int();
              std::int64_t b = rhs.as_int();
              std::int64_t out = 0;
              bool overflow = false;
              switch (p.op) {
                case PrimOp::Add:
                  overflow = __builtin_add_overflow(a, b, &out);
                  break;
                case PrimOp::Sub:
                  overflow = __builtin_sub_overflow(a, b, &out);
                  break;
                case PrimOp::Mul:
                  overflow = __builtin_mul_overflow(a, b, &out);
                  break;
                case PrimOp::Lt:
                  return Value::from_bool(a < b);
              }
              if (overflow) {
                raise(RuntimeErrorKind::IntegerOverflow,
                      "integer overflow: " + std::to_string(a) + " " +
                          std::string(prim_op_name(p.op)) + " " +
                          std::to_string(b) +
                          " does not fit in a signed 64-bit integer",
                      expr.span);
              }
              return Value::from_int(out);
            },
            [&](const LetExpr& l) -> Step {
              Environment extended = env;
              for (const LetBinding& binding : l.bindings) {
                Value init = eval_value(*binding.init, extended, depth);
                extended = extended.extended(binding.name, init);
              }
              return eval(*l.body, extended, depth, tail);
            },
            [&](const IfExpr& i) -> Step {
              Value cond = eval_value(*i.cond, env, depth);
              if (!cond.is_bool()) {
                raise(RuntimeErrorKind::TypeError,
                      "if condition must be a boolean, got " +
                          kind_name(cond.kind()),
                      i.cond->span);
              }
              const Expr& branch = cond.as_bool() ? *i.then_branch : *i.else_branch;
              return eval(branch, env, depth, tail);
            },
        },
        expr.node);
  }

  const Program& program_;
  const RunOptions& options_;
  ExecStats stats_;
  std::vector<CallFrame> frames_;
};

// Locates target within node and reports whether that location is tail.
bool find_position(const Expr& node, const Expr& target, bool tail, bool& result) {
  if (&node == &target) {
    result = tail;
    return true;
  }
  return std::visit(
      overloaded{
          [&](const NumExpr&) { return false; },
          [&](const VarExpr&) { return false; },
          [&](const CallExpr& c) {
            for (const ExprPtr& arg : c.args) {
              if (find_position(*arg, target, false, result)) return true;
            }
            return false;
          },
          [&](const PrimExpr& p) {
            return find_position(*p.lhs, target, false, result) ||
                   find_position(*p.rhs, target, false, result);
          },
          [&](const LetExpr& l) {
            for (const LetBinding& binding : l.bindings) {
              if (find_position(*binding.init, target, false, result)) return true;
            }
            return find_position(*l.body, target, tail, result);
          },
          [&](const IfExpr& i) {
            return find_position(*i.cond, target, false, result) ||
                   find_position(*i.then_branch, target, tail, result) ||
                   find_position(*i.else_branch, target, tail, result);
          },
      },
      node.node);
}

}  // namespace

std::string to_string(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::TypeError:
      return "TypeError";
    case RuntimeErrorKind::IntegerOverflow:
      return "IntegerOverflow";
    case RuntimeErrorKind::UnboundVariable:
      return "UnboundVariable";
    case RuntimeErrorKind::UnknownProcedure:
      return "UnknownProcedure";
    case RuntimeErrorKind::ArityMismatch:
      return "ArityMismatch";
    case RuntimeErrorKind::FuelExhausted:
      return "FuelExhausted";
  }
  return "TypeError";
}

std::string render(const RuntimeError& error) {
  std::string out =
      "error " + to_string(error.kind) + " " + at(error.span) + ": " + error.message;
  for (const CallFrame& frame : error.call_trace) {
    out += "\n  in " + frame.procedure + " at " + at(frame.span);
  }
  return out;
}

Environment Environment::extended(std::string name, Value value) const {
  return Environment(
      std::make_shared<const Node>(Node{std::move(name), value, head_}));
}

const Value* Environment::lookup(std::string_view name) const {
  for (const Node* node = head_.get(); node != nullptr; node = node->next.get()) {
    if (node->name == name) return &node->value;
  }
  return nullptr;
}

RunResult eval_program(const Program& program, const RunOptions& options) {
  return Interpreter(program, options).run();
}

std::variant<Value, RuntimeError> eval_expr(const Expr& expr, const Environment& env,
                                            const Program& program) {
  RunOptions options;
  return Interpreter(program, options).eval_detached(expr, env);
}

bool is_tail_position(const ProcedureDecl& proc, const Expr& expr) {
  bool result = false;
  if (!find_position(*proc.body, expr, true, result)) return false;
  return result;
}

}  // namespace miniproc
