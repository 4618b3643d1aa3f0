#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ast.hpp"
#include "diagnostic.hpp"

namespace miniproc {

using CallGraph = std::map<std::string, std::set<std::string>>;

// diagnostics are sorted errors-first, each severity group in source order.
// reachable is the transitive closure of call_graph from the entry name
// (empty when the entry is not declared).
struct AnalysisReport {
  std::vector<Diagnostic> diagnostics;
  CallGraph call_graph;
  std::set<std::string> reachable;

  bool has_errors() const;
  bool has_warnings() const;
};

// Validates a parse result before execution: duplicate procedures and
// parameters, unbound variables, unknown callees, arity mismatches,
// reserved names, and the entry convention (a nullary procedure, "main" by
// default). Warnings cover procedures unreachable from the entry and
// parameters or let bindings that are never referenced. Warnings never
// block execution.
AnalysisReport analyze(const Program& program, std::string_view entry = "main");

// Least set containing entry and closed under the graph's edges; empty when
// entry is not a key.
std::set<std::string> reachable_set(const CallGraph& graph, const std::string& entry);

}  // namespace miniproc
