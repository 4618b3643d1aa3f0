#include "analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "token.hpp"

namespace miniproc {

namespace {

std::string at(const SourceSpan& span) {
  return std::to_string(span.start_line) + ":" + std::to_string(span.start_col);
}

struct LocalBinding {
  const std::string* name;
  SourceSpan span;
  bool is_param;
  bool used = false;
};

class Analyzer {
 public:
  Analyzer(const Program& program, std::string_view entry)
      : program_(program), entry_(entry) {}

  AnalysisReport run() {
    collect_declarations();
    for (const ProcedureDecl& proc : program_.procedures) {
      check_procedure(proc);
    }
    check_entry();
    compute_reachability();
    std::stable_sort(report_.diagnostics.begin(), report_.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       if (a.severity != b.severity) {
                         return a.severity == Severity::Error;
                       }
                       if (a.span.start_line != b.span.start_line) {
                         return a.span.start_line < b.span.start_line;
                       }
                       return a.span.start_col < b.span.start_col;
                     });
    return std::move(report_);
  }

 private:
  void error(std::string code, std::string message, const SourceSpan& span) {
    report_.diagnostics.push_back(
        {Severity::Error, std::move(code), std::move(message), span});
  }

  void warning(std::string code, std::string message, const SourceSpan& span) {
    report_.diagnostics.push_back(
        {Severity::Warning, std::move(code), std::move(message), span});
  }

  void collect_declarations() {
    for (const ProcedureDecl& proc : program_.procedures) {
      report_.call_graph.try_emplace(proc.name);
      if (is_reserved_name(proc.name)) {
        error("RESERVED_NAME",
              "'" + proc.name + "' is reserved and cannot name a procedure",
              proc.name_span);
      }
      auto [it, inserted] = decls_.try_emplace(proc.name, &proc);
      if (!inserted) {
        error("DUP_PROC",
              "duplicate procedure '" + proc.name + "' (first declared at " +
                  at(it->second->name_span) + ")",
              proc.name_span);
      }
    }
  }

  void check_procedure(const ProcedureDecl& proc) {
    current_ = &proc;
    scope_.clear();
    for (std::size_t i = 0; i < proc.params.size(); ++i) {
      const Param& param = proc.params[i];
      if (is_reserved_name(param.name)) {
        error("RESERVED_NAME",
              "'" + param.name + "' is reserved and cannot name a parameter",
              param.span);
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (proc.params[j].name == param.name) {
          error("DUP_PARAM",
                "duplicate parameter '" + param.name + "' in procedure '" +
                    proc.name + "'",
                param.span);
          break;
        }
      }
      scope_.push_back({&param.name, param.span, /*is_param=*/true});
    }
    walk(*proc.body);
    for (const LocalBinding& binding : scope_) {
      if (!binding.used) {
        warning("UNUSED_PARAM",
                "parameter '" + *binding.name + "' of procedure '" + proc.name +
                    "' is never used",
                binding.span);
      }
    }
  }

  void walk(const Expr& e) {
    std::visit(
        overloaded{
            [&](const NumExpr&) {},
            [&](const VarExpr& v) {
              for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
                if (*it->name == v.name) {
                  it->used = true;
                  return;
                }
              }
              error("UNBOUND_VAR", "unbound variable '" + v.name + "'", e.span);
            },
            [&](const CallExpr& c) {
              report_.call_graph[current_->name].insert(c.callee);
              auto it = decls_.find(c.callee);
              if (it == decls_.end()) {
                error("UNKNOWN_PROC",
                      "call to undeclared procedure '" + c.callee + "'", e.span);
              } else {
                std::size_t expected = it->second->params.size();
                if (c.args.size() != expected) {
                  error("ARITY_MISMATCH",
                        "procedure '" + c.callee + "' expects " +
                            std::to_string(expected) +
                            (expected == 1 ? " argument, got " : " arguments, got ") +
                            std::to_string(c.args.size()),
                        e.span);
                }
              }
              for (const ExprPtr& arg : c.args) walk(*arg);
            },
            [&](const PrimExpr& p) {
              walk(*p.lhs);
              walk(*p.rhs);
            },
            [&](const LetExpr& l) {
              std::size_t base = scope_.size();
              for (const LetBinding& binding : l.bindings) {
                if (is_reserved_name(binding.name)) {
                  error("RESERVED_NAME",
                        "'" + binding.name +
                            "' is reserved and cannot name a let binding",
                        binding.name_span);
                }
                // Sequential scoping: the init sees only earlier bindings.
                walk(*binding.init);
                scope_.push_back({&binding.name, binding.name_span,
                                  /*is_param=*/false});
              }
              walk(*l.body);
              for (std::size_t i = scope_.size(); i > base; --i) {
                const LocalBinding& binding = scope_[i - 1];
                if (!binding.used) {
                  warning("UNUSED_LET",
                          "let binding '" + *binding.name + "' is never used",
                          binding.span);
                }
              }
              scope_.resize(base);
            },
            [&](const IfExpr& i) {
              walk(*i.cond);
              walk(*i.then_branch);
              walk(*i.else_branch);
            },
        },
        e.node);
  }

  void check_entry() {
    auto it = decls_.find(std::string(entry_));
    if (it == decls_.end()) {
      error("NO_ENTRY", "no entry procedure '" + std::string(entry_) + "'",
            program_.span);
      return;
    }
    const ProcedureDecl& entry = *it->second;
    if (!entry.params.empty()) {
      error("NO_ENTRY",
            "entry procedure '" + entry.name + "' must take no parameters, has " +
                std::to_string(entry.params.size()),
            entry.name_span);
    }
  }

  void compute_reachability() {
    std::string entry(entry_);
    report_.reachable = reachable_set(report_.call_graph, entry);
    if (!decls_.contains(entry)) return;
    for (const ProcedureDecl& proc : program_.procedures) {
      if (!report_.reachable.contains(proc.name)) {
        warning("UNREACHABLE_PROC",
                "procedure '" + proc.name + "' is unreachable from entry '" +
                    entry + "'",
                proc.name_span);
      }
    }
  }

  const Program& program_;
  std::string_view entry_;
  AnalysisReport report_;
  std::unordered_map<std::string, const ProcedureDecl*> decls_;
  const ProcedureDecl* current_ = nullptr;
  std::vector<LocalBinding> scope_;
};

}  // namespace

bool AnalysisReport::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool AnalysisReport::has_warnings() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Warning;
  });
}

AnalysisReport analyze(const Program& program, std::string_view entry) {
  return Analyzer(program, entry).run();
}

std::set<std::string> reachable_set(const CallGraph& graph, const std::string& entry) {
  std::set<std::string> seen;
  if (!graph.contains(entry)) return seen;
  std::vector<const std::string*> work;
  seen.insert(entry);
  work.push_back(&entry);
  while (!work.empty()) {
    const std::string& current = *work.back();
    work.pop_back();
    auto it = graph.find(current);
    if (it == graph.end()) continue;
    for (const std::string& callee : it->second) {
      auto [pos, inserted] = seen.insert(callee);
      if (inserted) work.push_back(&*pos);
    }
  }
  return seen;
}

}  // namespace miniproc
