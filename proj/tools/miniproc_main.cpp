#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "miniproc.h"

namespace {

constexpr const char* kUsage =
    "usage: miniproc (run|check|ast) [--entry NAME] [--fuel N] [--trace] "
    "[--werror] (FILE|-)";

struct Options {
  std::string input;
  std::string entry = "main";
  std::uint64_t fuel = 0;
  bool trace = false;
  bool werror = false;
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return !std::cin.bad();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file.is_open()) return false;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad() || buffer.bad()) return false;
  out = buffer.str();
  return true;
}

using ProgramHandle = std::unique_ptr<mp_program, decltype(&mp_program_free)>;
using ReportHandle = std::unique_ptr<mp_report, decltype(&mp_report_free)>;
using OutcomeHandle = std::unique_ptr<mp_outcome, decltype(&mp_outcome_free)>;

struct OwnedText {
  explicit OwnedText(char* ptr) : ptr_(ptr) {}
  ~OwnedText() { mp_string_free(ptr_); }
  OwnedText(const OwnedText&) = delete;
  OwnedText& operator=(const OwnedText&) = delete;
  const char* get() const { return ptr_ == nullptr ? "" : ptr_; }

 private:
  char* ptr_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolchain for the miniproc procedural language"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("input", opts.input,
                    "source file, or - for standard input")
        ->required();
    sub->add_option("--entry", opts.entry, "entry procedure (default: main)");
    sub->add_option("--fuel", opts.fuel,
                    "abort after this many procedure calls")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--trace", opts.trace,
                  "log each procedure application to standard error");
    sub->add_flag("--werror", opts.werror, "treat warnings as errors");
  };

  CLI::App* run_cmd =
      app.add_subcommand("run", "evaluate the entry procedure and print its value");
  CLI::App* check_cmd = app.add_subcommand("check", "run static analysis only");
  CLI::App* ast_cmd = app.add_subcommand("ast", "print the parsed syntax tree");
  add_common(run_cmd);
  add_common(check_cmd);
  add_common(ast_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << kUsage << '\n';
    return 2;
  }

  if (!mp_is_valid_identifier(opts.entry.c_str())) {
    std::cerr << "miniproc: invalid entry name '" << opts.entry << "'\n"
              << kUsage << '\n';
    return 2;
  }

  std::string source;
  if (!read_input(opts.input, source)) {
    std::cerr << "miniproc: cannot read '" << opts.input << "'\n";
    return 74;
  }

  ProgramHandle program(mp_compile(source.data(), source.size()),
                        &mp_program_free);
  if (program == nullptr) {
    std::cerr << "miniproc: out of memory\n";
    return 74;
  }
  if (mp_program_status(program.get()) != MP_OK) {
    OwnedText text(mp_program_diagnostics_text(program.get()));
    std::cerr << text.get();
    return 65;
  }

  if (ast_cmd->parsed()) {
    OwnedText dump(mp_program_ast_dump(program.get()));
    std::cout << dump.get();
    return 0;
  }

  ReportHandle report(mp_check(program.get(), opts.entry.c_str()),
                      &mp_report_free);
  if (report == nullptr) {
    std::cerr << "miniproc: invalid entry name '" << opts.entry << "'\n";
    return 2;
  }
  {
    OwnedText text(mp_report_text(report.get()));
    std::cerr << text.get();
  }
  bool errors = mp_report_has_errors(report.get()) != 0;
  bool warnings = mp_report_has_warnings(report.get()) != 0;
  if (errors || (opts.werror && warnings)) return 65;
  if (check_cmd->parsed()) return 0;

  mp_run_options run_opts = {};
  run_opts.entry = opts.entry.c_str();
  run_opts.fuel = opts.fuel;
  run_opts.trace = opts.trace ? 1 : 0;
  OutcomeHandle outcome(mp_run(program.get(), &run_opts), &mp_outcome_free);
  if (outcome == nullptr) {
    std::cerr << "miniproc: evaluation failed to start\n";
    return 70;
  }
  if (mp_outcome_status(outcome.get()) != MP_OK) {
    OwnedText text(mp_outcome_error_text(outcome.get()));
    std::cerr << text.get() << '\n';
    return 70;
  }
  mp_value value;
  if (!mp_outcome_value(outcome.get(), &value)) {
    std::cerr << "miniproc: evaluation produced no value\n";
    return 70;
  }
  OwnedText rendered(mp_value_text(&value));
  std::cout << rendered.get() << '\n';
  return 0;
}
