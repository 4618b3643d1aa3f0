#include "support/runner.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testsupport {

namespace {

std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file.is_open()) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string write_temp_file(const std::string& contents) {
  char path[] = "/tmp/miniproc_test_XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) {
    throw std::runtime_error("mkstemp failed");
  }
  std::size_t written = 0;
  while (written < contents.size()) {
    ssize_t n = write(fd, contents.data() + written, contents.size() - written);
    if (n < 0) {
      close(fd);
      throw std::runtime_error("write failed");
    }
    written += static_cast<std::size_t>(n);
  }
  close(fd);
  return path;
}

void remove_file(const std::string& path) { std::remove(path.c_str()); }

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_data) {
  std::string in_path = write_temp_file(stdin_data);
  std::string out_path = write_temp_file("");
  std::string err_path = write_temp_file("");

  std::string command = shell_quote(CLI_PATH);
  for (const std::string& arg : args) {
    command += ' ';
    command += shell_quote(arg);
  }
  command += " < " + shell_quote(in_path);
  command += " > " + shell_quote(out_path);
  command += " 2> " + shell_quote(err_path);

  int status = std::system(command.c_str());

  CliResult result;
  if (status >= 0 && WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  remove_file(in_path);
  remove_file(out_path);
  remove_file(err_path);
  return result;
}

std::string corpus_path(const std::string& name) {
  return std::string(MINIPROC_CORPUS_DIR) + "/" + name;
}

std::string sqrt_source() { return read_file(corpus_path("sqrt.mp")); }

std::string sqrt_with_main_body(const std::string& body) {
  std::string source = sqrt_source();
  const std::string target = "call SQRT(5)";
  std::size_t pos = source.find(target);
  if (pos == std::string::npos) {
    throw std::runtime_error("main body not found in the sqrt program");
  }
  return source.substr(0, pos) + body + source.substr(pos + target.size());
}

}  // namespace testsupport
