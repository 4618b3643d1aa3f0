#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ast.hpp"
#include "source_span.hpp"
#include "value.hpp"

namespace miniproc {

enum class RuntimeErrorKind {
  TypeError,
  IntegerOverflow,
  UnboundVariable,
  UnknownProcedure,
  ArityMismatch,
  FuelExhausted,
};

std::string to_string(RuntimeErrorKind kind);

struct CallFrame {
  std::string procedure;
  SourceSpan span;

  friend bool operator==(const CallFrame&, const CallFrame&) = default;
};

struct RuntimeError {
  RuntimeErrorKind kind = RuntimeErrorKind::TypeError;
  std::string message;
  SourceSpan span;
  // Active non-tail frames, innermost first.
  std::vector<CallFrame> call_trace;
};

// "error KIND line:col: message" plus one "  in NAME at line:col" per frame.
std::string render(const RuntimeError& error);

// Immutable chain of bindings. extended() shares the tail, so a let never
// mutates the frame it extends and lookup resolves to the innermost binding.
class Environment {
 public:
  Environment() = default;

  Environment extended(std::string name, Value value) const;
  const Value* lookup(std::string_view name) const;

 private:
  struct Node {
    std::string name;
    Value value;
    std::shared_ptr<const Node> next;
  };

  explicit Environment(std::shared_ptr<const Node> head) : head_(std::move(head)) {}

  std::shared_ptr<const Node> head_;
};

struct ExecStats {
  std::uint64_t calls_made = 0;
  std::uint64_t prim_ops = 0;
  std::uint64_t max_control_depth = 0;

  friend bool operator==(const ExecStats&, const ExecStats&) = default;
};

struct RunOptions {
  std::string entry = "main";
  std::optional<std::uint64_t> fuel;
  bool trace = false;
  // Receives one trace line without its trailing newline. When empty and
  // trace is on, lines go to standard error, flushed per line.
  std::function<void(std::string_view)> trace_sink;
};

struct RunResult {
  std::optional<Value> value;
  std::optional<RuntimeError> error;
  ExecStats stats;

  bool ok() const { return value.has_value(); }
};

RunResult eval_program(const Program& program, const RunOptions& options = {});

// Evaluates a detached expression against a program's procedures. No trace,
// no fuel; stats are discarded.
std::variant<Value, RuntimeError> eval_expr(const Expr& expr, const Environment& env,
                                            const Program& program);

// True iff expr is a node of proc's body in tail position: the body itself,
// a then/else branch of a tail if, or the body of a tail let. Compares node
// identity, not structure.
bool is_tail_position(const ProcedureDecl& proc, const Expr& expr);

}  // namespace miniproc
