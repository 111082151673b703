// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "monomap/monomap.h"

namespace {

constexpr const char* kAsciiLegend =
    "ASCII legend: '#' obstacle, '.' empty, 's' start, 't' target,\n"
    "'x' start of one robot and target of another, '*' verifier endpoints\n"
    "and, when a plan is given, the verifier's path.";

struct InstanceDeleter {
  void operator()(mm_instance* p) const { mm_instance_free(p); }
};
struct PlanDeleter {
  void operator()(mm_plan* p) const { mm_plan_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { mm_string_free(p); }
};
using InstancePtr = std::unique_ptr<mm_instance, InstanceDeleter>;
using PlanPtr = std::unique_ptr<mm_plan, PlanDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a status out of nested helpers.
struct Exit {
  int code;
};

[[noreturn]] void input_error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  throw Exit{MM_INPUT_ERROR};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& out_path, const char* text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) input_error("cannot write '" + out_path + "'");
}

// Errors (status >= 2) go to stderr and end the command.
void check(mm_status status) {
  if (status == MM_OK || status == MM_NEGATIVE) return;
  std::cerr << "error: " << mm_last_error() << "\n";
  throw Exit{status};
}

InstancePtr load_instance(const std::string& path) {
  const std::string text = read_input(path);
  mm_instance* raw = nullptr;
  check(mm_instance_from_json(text.c_str(), &raw));
  return InstancePtr(raw);
}

PlanPtr load_plan(const mm_instance* instance, const std::string& path) {
  const std::string text = read_input(path);
  mm_plan* raw = nullptr;
  check(mm_plan_from_json(instance, text.c_str(), &raw));
  return PlanPtr(raw);
}

void emit_plan(const mm_instance* instance, const mm_plan* plan, const std::string& out) {
  char* raw = nullptr;
  check(mm_plan_to_json(instance, plan, &raw));
  StringPtr json(raw);
  write_output(out, json.get());
}

int solver_cap(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MONOMAP_SOLVER_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    input_error(std::string("MONOMAP_SOLVER_CAP must be a positive integer, got '") + env + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomap: monotone multi-robot motion planning toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mm_version());

  std::string input;
  std::string second;
  std::string out;
  std::string format;
  int cap = 0;
  int max_dim = 1;

  auto* reduce = app.add_subcommand("reduce", "Reduce a 3-CNF DIMACS formula to a grid instance");
  reduce->add_option("cnf", input, "DIMACS file ('-' for stdin)")->required();
  reduce->add_option("-o,--out", out, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Decide monotone feasibility; print a plan or 'infeasible'");
  solve->add_option("instance", input, "Instance document")->required();
  solve->add_option("-o,--out", out, "Output file (default stdout)");
  solve->add_option("--cap", cap, "Robot cap (default: $MONOMAP_SOLVER_CAP or 24)");

  auto* validate = app.add_subcommand("validate", "Check a plan against an instance");
  validate->add_option("instance", input, "Instance document")->required();
  validate->add_option("plan", second, "Plan document")->required();

  auto* synthesize = app.add_subcommand("synthesize", "Build a plan from a satisfying assignment");
  synthesize->add_option("instance", input, "Instance document with layout")->required();
  synthesize->add_option("assignment", second, "e.g. a=T,b=F,c=T")->required();
  synthesize->add_option("-o,--out", out, "Output file (default stdout)");

  auto* extract = app.add_subcommand("extract", "Read a satisfying assignment off a valid plan");
  extract->add_option("instance", input, "Instance document with layout")->required();
  extract->add_option("plan", second, "Plan document")->required();

  auto* sat = app.add_subcommand("sat", "Brute-force satisfiability; print an assignment or 'unsat'");
  sat->add_option("cnf", input, "DIMACS file ('-' for stdin)")->required();

  auto* decouple = app.add_subcommand("decouple", "Find a solution sequence of bounded dimension");
  decouple->add_option("instance", input, "Instance document")->required();
  decouple->add_option("--max-dim", max_dim, "Largest allowed group size")->check(CLI::PositiveNumber);
  decouple->add_option("-o,--out", out, "Output file (default stdout)");
  decouple->add_option("--cap", cap, "Robot cap for dimension 1 (default: $MONOMAP_SOLVER_CAP or 24)");

  auto* discs = app.add_subcommand("to-discs", "Convert an instance (and plan) to unit discs");
  discs->add_option("instance", input, "Instance document")->required();
  discs->add_option("plan", second, "Plan document");
  discs->add_option("-o,--out", out, "Output file (default stdout)");

  auto* render = app.add_subcommand("render", "Draw an instance (and plan)");
  render->footer(kAsciiLegend);
  render->add_option("instance", input, "Instance document")->required();
  render->add_option("plan", second, "Plan document");
  render->add_option("--format", format, "svg or ascii (default: svg for a .svg output file, else ascii)")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("-o,--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : MM_INPUT_ERROR;
  }

  try {
    if (reduce->parsed()) {
      const std::string text = read_input(input);
      mm_instance* raw = nullptr;
      check(mm_instance_from_dimacs(text.c_str(), &raw));
      InstancePtr instance(raw);
      char* json = nullptr;
      check(mm_instance_to_json(instance.get(), &json));
      write_output(out, StringPtr(json).get());
      return MM_OK;
    }
    if (solve->parsed()) {
      InstancePtr instance = load_instance(input);
      mm_plan* raw = nullptr;
      const mm_status status = mm_solve(instance.get(), solver_cap(cap), &raw, nullptr);
      check(status);
      if (status == MM_NEGATIVE) {
        std::cout << "infeasible\n";
        return MM_NEGATIVE;
      }
      PlanPtr plan(raw);
      emit_plan(instance.get(), plan.get(), out);
      return MM_OK;
    }
    if (validate->parsed()) {
      InstancePtr instance = load_instance(input);
      PlanPtr plan = load_plan(instance.get(), second);
      char* raw = nullptr;
      const mm_status status = mm_validate(instance.get(), plan.get(), &raw);
      check(status);
      StringPtr report(raw);
      std::cout << report.get();
      return status;
    }
    if (synthesize->parsed()) {
      InstancePtr instance = load_instance(input);
      mm_plan* raw = nullptr;
      check(mm_synthesize(instance.get(), second.c_str(), &raw));
      PlanPtr plan(raw);
      emit_plan(instance.get(), plan.get(), out);
      return MM_OK;
    }
    if (extract->parsed()) {
      InstancePtr instance = load_instance(input);
      PlanPtr plan = load_plan(instance.get(), second);
      char* raw = nullptr;
      const mm_status status = mm_extract(instance.get(), plan.get(), &raw);
      check(status);
      if (status == MM_NEGATIVE) {
        std::cerr << mm_last_error() << "\n";
        return MM_NEGATIVE;
      }
      std::cout << StringPtr(raw).get() << "\n";
      return MM_OK;
    }
    if (sat->parsed()) {
      const std::string text = read_input(input);
      char* raw = nullptr;
      const mm_status status = mm_sat_dimacs(text.c_str(), &raw);
      check(status);
      if (status == MM_NEGATIVE) {
        std::cout << "unsat\n";
        return MM_NEGATIVE;
      }
      std::cout << StringPtr(raw).get() << "\n";
      return MM_OK;
    }
    if (decouple->parsed()) {
      InstancePtr instance = load_instance(input);
      char* raw = nullptr;
      const mm_status status = mm_decouple(instance.get(), max_dim, solver_cap(cap), &raw);
      check(status);
      if (status == MM_NEGATIVE) {
        std::cout << "none\n";
        return MM_NEGATIVE;
      }
      write_output(out, StringPtr(raw).get());
      return MM_OK;
    }
    if (discs->parsed()) {
      InstancePtr instance = load_instance(input);
      PlanPtr plan;
      if (!second.empty()) plan = load_plan(instance.get(), second);
      char* raw = nullptr;
      const mm_status status = mm_to_discs(instance.get(), plan.get(), &raw);
      check(status);
      write_output(out, StringPtr(raw).get());
      return status;
    }
    if (render->parsed()) {
      InstancePtr instance = load_instance(input);
      PlanPtr plan;
      if (!second.empty()) plan = load_plan(instance.get(), second);
      if (format.empty()) format = out.ends_with(".svg") ? "svg" : "ascii";
      char* raw = nullptr;
      check(mm_render(instance.get(), plan.get(), format == "svg" ? MM_RENDER_SVG : MM_RENDER_ASCII,
                      &raw));
      write_output(out, StringPtr(raw).get());
      return MM_OK;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return MM_INPUT_ERROR;
}
