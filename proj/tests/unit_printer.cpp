#include <random>
#include <string>

#include "ast.hpp"
#include "doctest.h"
#include "parser.hpp"
#include "printer.hpp"
#include "support/astgen.hpp"
#include "support/build.hpp"
#include "support/runner.hpp"

using miniproc::ast_dump;
using miniproc::parse_source;
using miniproc::pretty_print;
using miniproc::PrimOp;
using miniproc::Program;

namespace {

Program parse_ok(const std::string& source) {
  auto result = parse_source(source);
  REQUIRE_MESSAGE(result.ok(), (result.ok() ? std::string() : result.error().message));
  return std::move(result.value());
}

}  // namespace

TEST_CASE("pretty printing a single procedure") {
  Program program = parse_ok("program{procedure f(x,y){+(x,call g(y))}}");
  CHECK(pretty_print(program) ==
        "program {\n"
        "  procedure f(x,y) {\n"
        "    +(x,call g(y))\n"
        "  }\n"
        "}\n");
}

TEST_CASE("pretty printing lays out let and if blocks") {
  Program program = parse_ok(
      "program { procedure f(x) { let a = 1, b = +(a,x) in if lt?(a,b) then a "
      "else b } }");
  CHECK(pretty_print(program) ==
        "program {\n"
        "  procedure f(x) {\n"
        "    let a = 1,\n"
        "        b = +(a,x)\n"
        "    in if lt?(a,b)\n"
        "       then a\n"
        "       else b\n"
        "  }\n"
        "}\n");
}

TEST_CASE("nested let and if inside operands print inline") {
  Program program = parse_ok(
      "program { procedure f() { +(let a = 1 in a,if lt?(1,2) then 3 else 4) } "
      "}");
  CHECK(pretty_print(program) ==
        "program {\n"
        "  procedure f() {\n"
        "    +(let a = 1 in a,if lt?(1,2) then 3 else 4)\n"
        "  }\n"
        "}\n");
}

TEST_CASE("the square root program pretty prints canonically") {
  Program program = parse_ok(testsupport::sqrt_source());
  CHECK(pretty_print(program) ==
        "program {\n"
        "  procedure SQRT(radicand) {\n"
        "    call SqrtIter(0,radicand,call Precision(radicand))\n"
        "  }\n"
        "  procedure SqrtIter(approximation,radicand,precision) {\n"
        "    let bid = call Improve(approximation,radicand,precision)\n"
        "    in if call IsPreciseEnough?(bid,radicand)\n"
        "       then bid\n"
        "       else call SqrtIter(bid,radicand,precision)\n"
        "  }\n"
        "  procedure Improve(approximation,radicand,precision) {\n"
        "    +(approximation,precision)\n"
        "  }\n"
        "  procedure Precision(x) {\n"
        "    1\n"
        "  }\n"
        "  procedure IsPreciseEnough?(root,square) {\n"
        "    lt?(square,call Square(root))\n"
        "  }\n"
        "  procedure Square(x) {\n"
        "    *(x,x)\n"
        "  }\n"
        "  procedure Abs(x) {\n"
        "    if lt?(x,0)\n"
        "    then -(0,x)\n"
        "    else x\n"
        "  }\n"
        "  procedure main() {\n"
        "    call SQRT(5)\n"
        "  }\n"
        "}\n");
}

TEST_CASE("the syntax tree dump of the square root program") {
  Program program = parse_ok(testsupport::sqrt_source());
  CHECK(ast_dump(program) == R"((program
  (procedure SQRT (radicand) (call SqrtIter (num 0) (var radicand) (call Precision (var radicand))))
  (procedure SqrtIter (approximation radicand precision) (let ((bid (call Improve (var approximation) (var radicand) (var precision)))) (if (call IsPreciseEnough? (var bid) (var radicand)) (var bid) (call SqrtIter (var bid) (var radicand) (var precision)))))
  (procedure Improve (approximation radicand precision) (prim + (var approximation) (var precision)))
  (procedure Precision (x) (num 1))
  (procedure IsPreciseEnough? (root square) (prim lt? (var square) (call Square (var root))))
  (procedure Square (x) (prim * (var x) (var x)))
  (procedure Abs (x) (if (prim lt? (var x) (num 0)) (prim - (num 0) (var x)) (var x)))
  (procedure main () (call SQRT (num 5)))
)
)");
}

TEST_CASE("dump forms for each expression") {
  using namespace testsupport;
  std::vector<miniproc::ExprPtr> args;
  args.push_back(num(1));
  args.push_back(var("x"));
  Program p = program({});
  p.procedures.push_back(proc("f", {"x"}, call("g", std::move(args))));
  CHECK(ast_dump(p) ==
        "(program\n  (procedure f (x) (call g (num 1) (var x)))\n)\n");

  std::vector<std::pair<std::string, miniproc::ExprPtr>> bindings;
  bindings.emplace_back("a", num(1));
  bindings.emplace_back("b", num(2));
  Program q = program({});
  q.procedures.push_back(proc(
      "h", {},
      let(std::move(bindings),
          iff(prim(PrimOp::Lt, var("a"), var("b")), var("a"), var("b")))));
  CHECK(ast_dump(q) ==
        "(program\n  (procedure h () (let ((a (num 1)) (b (num 2))) "
        "(if (prim lt? (var a) (var b)) (var a) (var b))))\n)\n");
}

TEST_CASE("roundtrip: the square root program survives pretty printing") {
  Program original = parse_ok(testsupport::sqrt_source());
  Program reparsed = parse_ok(pretty_print(original));
  CHECK(structurally_equal(original, reparsed));
  CHECK(pretty_print(reparsed) == pretty_print(original));
}

TEST_CASE("roundtrip: generated programs survive pretty printing") {
  std::mt19937 rng(20260821);
  for (int i = 0; i < 150; ++i) {
    Program generated = testsupport::random_program(rng);
    std::string printed = pretty_print(generated);
    auto reparsed = parse_source(printed);
    REQUIRE_MESSAGE(reparsed.ok(), printed);
    CHECK_MESSAGE(structurally_equal(generated, reparsed.value()), printed);
    CHECK(pretty_print(reparsed.value()) == printed);
  }
}

TEST_CASE("printing preserves extreme numerals") {
  Program program =
      parse_ok("program { procedure f() { +(9223372036854775807,0) } }");
  CHECK(pretty_print(program).find("9223372036854775807") != std::string::npos);
  Program reparsed = parse_ok(pretty_print(program));
  CHECK(structurally_equal(program, reparsed));
}
