// Batch front end: evaluates query scripts over presented algebras and
// spectral profiles, checks scripts without running them, and runs the
// built-in fixture suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tensordim/errors.hpp"
#include "tensordim/interpreter.hpp"
#include "tensordim/script.hpp"
#include "tensordim/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefusal = 1;
constexpr int kExitParseFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_eval(const std::string& path, bool machine) {
  using namespace tensordim;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseFailure;
  }
  try {
    script::Script s = script::parse_script(text);
    std::vector<script::ReportRecord> records = script::execute_script(s);
    std::cout << script::format_report(records,
                                       machine ? script::ReportMode::machine
                                               : script::ReportMode::text);
    return script::any_refused(records) ? kExitRefusal : kExitOk;
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column()
              << ": error: " << e.what() << "\n";
    return kExitParseFailure;
  }
}

int run_check(const std::string& path) {
  using namespace tensordim;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseFailure;
  }
  try {
    script::Script s = script::parse_script(text);
    script::check_script(s);
    std::cout << path << ": ok (" << (s.algebras.size() + s.profiles.size())
              << " bindings, " << s.queries.size() << " queries)\n";
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column()
              << ": error: " << e.what() << "\n";
    return kExitParseFailure;
  }
}

int run_selftest() {
  auto results = tensordim::selftest::run_all();
  std::cout << tensordim::selftest::format_results(results);
  return tensordim::selftest::all_passed(results) ? kExitOk : kExitRefusal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krull dimensions and prime heights of tensor products of "
               "algebras over a field"};
  app.require_subcommand(1);

  std::string eval_path;
  bool machine = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a query script");
  eval->add_option("script", eval_path, "script file")->required();
  eval->add_flag("--machine", machine,
                 "tab-separated machine report (byte-stable)");

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "parse and validate only");
  check->add_option("script", check_path, "script file")->required();

  app.add_subcommand("selftest", "run the built-in fixture suite");

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_eval(eval_path, machine);
  if (check->parsed()) return run_check(check_path);
  return run_selftest();
}
