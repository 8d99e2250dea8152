// transfinitum: evaluate expressions over ordinals, surreals and Hahn series,
// or run the randomized law suites.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "transfinitum/expr.hpp"
#include "transfinitum/suites.hpp"
#include "transfinitum/surreal.hpp"

namespace {

using namespace transfinitum;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

void print_error(const std::string& source, std::size_t position, const std::string& what) {
  std::cerr << "error at column " << position + 1 << ": " << what << "\n";
  if (source.find('\n') == std::string::npos) {
    std::cerr << "  " << source << "\n  " << std::string(std::min(position, source.size()), ' ') << "^\n";
  }
}

// Prints the value or a diagnostic; returns false on error.
bool evaluate_line(const std::string& source, std::ostream& out) {
  try {
    out << expr::eval(source) << "\n";
    return true;
  } catch (const ParseError& e) {
    print_error(source, e.position(), e.what());
  } catch (const expr::EvalError& e) {
    print_error(source, e.position(), e.what());
  }
  return false;
}

bool apply_step_budget() {
  const char* env = std::getenv("TRANSFINITUM_STEP_BUDGET");
  if (!env || !*env) return true;
  try {
    std::size_t used = 0;
    unsigned long long steps = std::stoull(env, &used);
    if (used != std::string(env).size() || steps == 0) throw std::invalid_argument(env);
    set_step_budget(steps);
    return true;
  } catch (const std::exception&) {
    std::cerr << "TRANSFINITUM_STEP_BUDGET must be a positive integer\n";
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on ordinals, surreal numbers and Hahn series"};
  app.require_subcommand(1);

  std::string source;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression and print its canonical form");
  std::vector<std::string> words;
  // Expressions may start with '-', so everything after `eval` is taken verbatim.
  eval_cmd->prefix_command();
  eval_cmd->add_option("expr", words, "Expression to evaluate");

  auto* repl_cmd = app.add_subcommand("repl", "Read expressions line by line");

  std::string suite;
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  auto* check_cmd = app.add_subcommand("check", "Run a randomized law suite");
  check_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--cases", cases, "Cases per law");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (!apply_step_budget()) return exit_usage;

  if (*eval_cmd) {
    for (const auto& w : words) source += (source.empty() ? "" : " ") + w;
    for (const auto& w : eval_cmd->remaining()) source += (source.empty() ? "" : " ") + w;
    if (source.empty()) {
      std::cerr << "eval: expr is required\n";
      return exit_usage;
    }
    return evaluate_line(source, std::cout) ? exit_ok : exit_usage;
  }

  if (*repl_cmd) {
    std::string line;
    bool interactive = isatty(STDIN_FILENO) != 0;
    for (;;) {
      if (interactive) std::cout << "> " << std::flush;
      if (!std::getline(std::cin, line)) break;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line == "quit" || line == "exit") break;
      evaluate_line(line, std::cout);
    }
    return exit_ok;
  }

  auto report = run_suite(suite, cases, seed);
  if (format == "json")
    std::cout << report->to_json().dump(2) << "\n";
  else
    std::cout << report->to_text();
  return report->ok() ? exit_ok : exit_failure;
}
