#include <set>
#include <string>

#include "analysis.hpp"
#include "doctest.h"
#include "parser.hpp"
#include "support/runner.hpp"

using miniproc::analyze;
using miniproc::AnalysisReport;
using miniproc::CallGraph;
using miniproc::Diagnostic;
using miniproc::parse_source;
using miniproc::Program;
using miniproc::reachable_set;
using miniproc::Severity;
using miniproc::SourceSpan;

namespace {

AnalysisReport analyze_source(const std::string& source,
                              const std::string& entry = "main") {
  auto result = parse_source(source);
  REQUIRE_MESSAGE(result.ok(), (result.ok() ? std::string() : result.error().message));
  return analyze(result.value(), entry);
}

AnalysisReport analyze_corpus(const std::string& name) {
  return analyze_source(testsupport::read_file(testsupport::corpus_path(name)));
}

const Diagnostic* find_code(const AnalysisReport& report,
                            const std::string& code) {
  for (const Diagnostic& d : report.diagnostics) {
    if (d.code == code) return &d;
  }
  return nullptr;
}

int count_code(const AnalysisReport& report, const std::string& code) {
  int n = 0;
  for (const Diagnostic& d : report.diagnostics) {
    if (d.code == code) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("the square root program analyzes without errors") {
  AnalysisReport report = analyze_source(testsupport::sqrt_source());
  CHECK(!report.has_errors());
  REQUIRE(report.diagnostics.size() == 3);

  CHECK(report.diagnostics[0].severity == Severity::Warning);
  CHECK(report.diagnostics[0].code == "UNUSED_PARAM");
  CHECK(report.diagnostics[0].span == SourceSpan{13, 34, 13, 41});
  CHECK(report.diagnostics[0].message ==
        "parameter 'radicand' of procedure 'Improve' is never used");

  CHECK(report.diagnostics[1].code == "UNUSED_PARAM");
  CHECK(report.diagnostics[1].span == SourceSpan{16, 22, 16, 22});
  CHECK(report.diagnostics[1].message ==
        "parameter 'x' of procedure 'Precision' is never used");

  CHECK(report.diagnostics[2].code == "UNREACHABLE_PROC");
  CHECK(report.diagnostics[2].span == SourceSpan{21, 12, 21, 14});
  CHECK(report.diagnostics[2].message ==
        "procedure 'Abs' is unreachable from entry 'main'");
}

TEST_CASE("the square root call graph") {
  AnalysisReport report = analyze_source(testsupport::sqrt_source());
  CallGraph expected = {
      {"SQRT", {"SqrtIter", "Precision"}},
      {"SqrtIter", {"Improve", "IsPreciseEnough?", "SqrtIter"}},
      {"Improve", {}},
      {"Precision", {}},
      {"IsPreciseEnough?", {"Square"}},
      {"Square", {}},
      {"Abs", {}},
      {"main", {"SQRT"}},
  };
  CHECK(report.call_graph == expected);

  std::set<std::string> reachable = {"main",     "SQRT",   "SqrtIter",
                                     "Precision", "Improve", "IsPreciseEnough?",
                                     "Square"};
  CHECK(report.reachable == reachable);
}

TEST_CASE("unbound variables are errors") {
  AnalysisReport report = analyze_corpus("err_unbound.mp");
  const Diagnostic* d = find_code(report, "UNBOUND_VAR");
  REQUIRE(d != nullptr);
  CHECK(d->severity == Severity::Error);
  CHECK(d->span == SourceSpan{3, 5, 3, 11});
  CHECK(d->message == "unbound variable 'mystery'");
}

TEST_CASE("wrong argument counts are errors") {
  AnalysisReport report = analyze_corpus("err_arity.mp");
  const Diagnostic* d = find_code(report, "ARITY_MISMATCH");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{3, 5, 3, 20});
  CHECK(d->message == "procedure 'Square' expects 1 argument, got 2");
}

TEST_CASE("arity messages pluralize") {
  AnalysisReport report = analyze_source(
      "program { procedure main() { call f(1) } procedure f() { 1 } }");
  const Diagnostic* d = find_code(report, "ARITY_MISMATCH");
  REQUIRE(d != nullptr);
  CHECK(d->message == "procedure 'f' expects 0 arguments, got 1");
}

TEST_CASE("duplicate procedures are errors pointing back to the first") {
  AnalysisReport report = analyze_corpus("err_dup_proc.mp");
  const Diagnostic* d = find_code(report, "DUP_PROC");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{8, 13, 8, 17});
  CHECK(d->message == "duplicate procedure 'Twice' (first declared at 5:13)");
}

TEST_CASE("duplicate parameters are errors") {
  AnalysisReport report = analyze_corpus("err_dup_param.mp");
  const Diagnostic* d = find_code(report, "DUP_PARAM");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{5, 20, 5, 20});
  CHECK(d->message == "duplicate parameter 'x' in procedure 'Add2'");
}

TEST_CASE("calls to undeclared procedures are errors") {
  AnalysisReport report = analyze_corpus("err_unknown_proc.mp");
  const Diagnostic* d = find_code(report, "UNKNOWN_PROC");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{3, 5, 3, 19});
  CHECK(d->message == "call to undeclared procedure 'Phantom'");
}

TEST_CASE("reserved names cannot be declared") {
  AnalysisReport report = analyze_corpus("err_reserved.mp");
  const Diagnostic* d = find_code(report, "RESERVED_NAME");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{5, 13, 5, 15});
  CHECK(d->message == "'lt?' is reserved and cannot name a procedure");
}

TEST_CASE("reserved parameter and binding names are flagged") {
  AnalysisReport as_param = analyze_source(
      "program { procedure main() { 1 } procedure f(lt?) { 2 } }");
  const Diagnostic* p = find_code(as_param, "RESERVED_NAME");
  REQUIRE(p != nullptr);
  CHECK(p->message == "'lt?' is reserved and cannot name a parameter");

  AnalysisReport report = analyze_source(
      "program { procedure main() { let lt? = 1 in 2 } }");
  const Diagnostic* d = find_code(report, "RESERVED_NAME");
  REQUIRE(d != nullptr);
  CHECK(d->message == "'lt?' is reserved and cannot name a let binding");
}

TEST_CASE("a missing entry procedure is an error") {
  AnalysisReport report = analyze_source("program { }");
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].code == "NO_ENTRY");
  CHECK(report.diagnostics[0].message == "no entry procedure 'main'");
  CHECK(report.diagnostics[0].span == SourceSpan{1, 1, 1, 11});
}

TEST_CASE("an entry procedure with parameters is an error") {
  AnalysisReport report =
      analyze_source(testsupport::sqrt_source(), "SQRT");
  const Diagnostic* d = find_code(report, "NO_ENTRY");
  REQUIRE(d != nullptr);
  CHECK(d->span == SourceSpan{2, 12, 2, 15});
  CHECK(d->message ==
        "entry procedure 'SQRT' must take no parameters, has 1");

  SUBCASE("reachability follows the alternate entry") {
    CHECK(report.reachable.contains("SQRT"));
    CHECK(report.reachable.contains("Square"));
    CHECK(!report.reachable.contains("main"));
    const Diagnostic* unreachable = find_code(report, "UNREACHABLE_PROC");
    REQUIRE(unreachable != nullptr);
    CHECK(count_code(report, "UNREACHABLE_PROC") == 2);
  }
}

TEST_CASE("no reachability warnings when the entry is missing") {
  AnalysisReport report =
      analyze_source("program { procedure f() { 1 } }");
  CHECK(find_code(report, "NO_ENTRY") != nullptr);
  CHECK(find_code(report, "UNREACHABLE_PROC") == nullptr);
  CHECK(report.reachable.empty());
}

TEST_CASE("unused let bindings are warnings") {
  AnalysisReport report = analyze_source(
      "program { procedure main() { let unused = 1 in 2 } }");
  const Diagnostic* d = find_code(report, "UNUSED_LET");
  REQUIRE(d != nullptr);
  CHECK(d->severity == Severity::Warning);
  CHECK(d->span == SourceSpan{1, 34, 1, 39});
  CHECK(d->message == "let binding 'unused' is never used");
  CHECK(!report.has_errors());
}

TEST_CASE("let bindings scope sequentially") {
  AnalysisReport clean = analyze_source(
      "program { procedure main() { let a = 1, b = a in b } }");
  CHECK(clean.diagnostics.empty());

  AnalysisReport forward = analyze_source(
      "program { procedure main() { let a = b, b = 1 in +(a,b) } }");
  const Diagnostic* d = find_code(forward, "UNBOUND_VAR");
  REQUIRE(d != nullptr);
  CHECK(d->message == "unbound variable 'b'");
}

TEST_CASE("shadowing marks only the innermost binding as used") {
  AnalysisReport report = analyze_source(
      "program { procedure main() { call f(1) } "
      "procedure f(x) { let x = 1 in x } }");
  const Diagnostic* d = find_code(report, "UNUSED_PARAM");
  REQUIRE(d != nullptr);
  CHECK(d->message == "parameter 'x' of procedure 'f' is never used");
  CHECK(find_code(report, "UNUSED_LET") == nullptr);
}

TEST_CASE("let names may shadow each other") {
  AnalysisReport report = analyze_source(
      "program { procedure main() { let a = 1, a = 2 in a } }");
  CHECK(!report.has_errors());
  const Diagnostic* d = find_code(report, "UNUSED_LET");
  REQUIRE(d != nullptr);
  CHECK(d->span.start_col == 34);
}

TEST_CASE("errors precede warnings, each group in source order") {
  AnalysisReport report = analyze_source(
      "program {\n"
      "  procedure helper(ghost) {\n"
      "    1\n"
      "  }\n"
      "  procedure main() {\n"
      "    mystery\n"
      "  }\n"
      "}");
  REQUIRE(report.diagnostics.size() >= 3);
  CHECK(report.diagnostics[0].code == "UNBOUND_VAR");
  CHECK(report.diagnostics[0].span.start_line == 6);
  CHECK(report.diagnostics[1].severity == Severity::Warning);
  CHECK(report.diagnostics[1].span.start_line == 2);
  CHECK(report.diagnostics[2].span.start_line == 2);
  CHECK(report.diagnostics[1].code == "UNREACHABLE_PROC");
  CHECK(report.diagnostics[1].span.start_col == 13);
  CHECK(report.diagnostics[2].code == "UNUSED_PARAM");
  CHECK(report.diagnostics[2].span.start_col == 20);
}

TEST_CASE("reachable_set walks the graph transitively") {
  CallGraph graph = {
      {"a", {"b", "c"}},
      {"b", {"d"}},
      {"c", {"d"}},
      {"d", {"a"}},
      {"e", {"a"}},
  };
  std::set<std::string> from_a = {"a", "b", "c", "d"};
  CHECK(reachable_set(graph, "a") == from_a);
  CHECK(reachable_set(graph, "e").size() == 5);
  CHECK(reachable_set(graph, "missing").empty());
}

TEST_CASE("reachable_set tolerates edges to undeclared names") {
  CallGraph graph = {{"a", {"ghost"}}};
  std::set<std::string> expected = {"a", "ghost"};
  CHECK(reachable_set(graph, "a") == expected);
}

TEST_CASE("recursion does not hide reachability") {
  AnalysisReport report = analyze_source(
      "program { procedure main() { call Loop() } "
      "procedure Loop() { call Loop() } }");
  CHECK(report.diagnostics.empty());
  CHECK(report.reachable.contains("Loop"));
}
