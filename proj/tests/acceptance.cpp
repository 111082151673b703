// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monomap/decoupling.hpp"
#include "monomap/documents.hpp"
#include "monomap/error.hpp"
#include "monomap/planning.hpp"
#include "monomap/reconfig.hpp"
#include "monomap/reduction.hpp"
#include "monomap/render.hpp"
#include "test_support.hpp"

using namespace monomap;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string artifacts;  // everything the run produced, for the determinism check

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<CnfFormula> criterion1_formulas() {
  std::vector<CnfFormula> formulas = testing::canonical_small_formulas();
  std::mt19937 rng(20240601);
  for (int i = 0; i < 500; ++i) formulas.push_back(testing::random_formula(rng, 4, 5));
  return formulas;
}

std::string order_labels(const Instance& inst, const MonotonePlan& plan) {
  std::string out;
  for (const Move& m : plan.moves) {
    if (!out.empty()) out += ", ";
    out += inst.robot(m.robot).label;
  }
  return out;
}

Outcome reduction_equivalence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto formulas = criterion1_formulas();
  int sat = 0;
  for (const CnfFormula& f : formulas) {
    const bool satisfiable = brute_force_sat(f).has_value();
    const auto [inst, layout] = build_instance(f);
    const auto plan = solve_monotone(inst);
    sat += satisfiable ? 1 : 0;
    o.artifacts += encode_instance(inst, &layout);
    o.artifacts += plan ? encode_plan(inst, *plan) : "infeasible\n";
    if (satisfiable != plan.has_value()) o.fail("mismatch on\n" + serialize_dimacs(f));
    if (plan && validate_monotone_plan(inst, *plan)) o.fail("invalid solver plan");
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << formulas.size() << " formulas (" << sat << " sat, " << formulas.size() - sat
       << " unsat) in " << elapsed << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome figure1() {
  Outcome o;
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const auto [plan, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  const std::string order = order_labels(inst, plan);
  const std::string expected = "¬c1, b1, ¬a1, r*, a2, a1, ¬b2, c2, ¬b1, c1";
  o.artifacts = encode_instance(inst, &layout) + encode_plan(inst, plan) + render_svg(inst, &plan);
  if (order != expected) o.fail("order " + order);
  if (auto v = validate_monotone_plan(inst, plan)) o.fail(to_string(*v));
  if (auto problem = audit_layout(inst, layout)) o.fail(*problem);
  if (o.pass) o.detail = order;
  return o;
}

Outcome infeasibility_witness() {
  Outcome o;
  const auto [inst, layout] = build_instance(testing::complete_formula());
  SolverStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  // 25 robots: one above the default cap, so raise it explicitly.
  const auto plan = solve_monotone(inst, {25}, &stats);
  const double elapsed = seconds_since(t0);
  o.artifacts = encode_instance(inst, &layout) + std::to_string(stats.states_visited);
  if (plan) o.fail("solver found a plan");
  if (stats.states_visited > 1024) o.fail(std::to_string(stats.states_visited) + " states");
  if (elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << inst.size() << " robots, " << stats.states_visited << " states, " << elapsed << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome extraction_soundness() {
  Outcome o;
  std::mt19937 rng(777);
  int done = 0;
  while (done < 200) {
    const CnfFormula f = testing::random_formula(rng, 5, 6);
    const auto a = brute_force_sat(f);
    if (!a) continue;
    ++done;
    const auto [inst, layout] = build_instance(f);
    const auto [synth, trace] = synthesize_plan(inst, layout, *a);
    const auto solved = solve_monotone(inst);
    if (!solved) {
      o.fail("solver missed a plan for\n" + serialize_dimacs(f));
      continue;
    }
    for (const MonotonePlan* plan : {&synth, &*solved}) {
      const Assignment back = extract_assignment(inst, layout, *plan);
      o.artifacts += format_assignment(back) + "\n";
      if (!evaluate(f, back)) o.fail("extracted assignment fails\n" + serialize_dimacs(f));
    }
  }
  if (o.pass) o.detail = "200 formulas, 400 plans";
  return o;
}

Outcome solver_oracle() {
  Outcome o;
  std::mt19937 rng(4242);
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance inst = testing::random_instance(rng, 5, 6);
    const auto plan = solve_monotone(inst);
    const bool expected = testing::naive_monotone_feasible(inst);
    feasible += expected ? 1 : 0;
    o.artifacts += encode_instance(inst);
    o.artifacts += plan ? encode_plan(inst, *plan) : "infeasible\n";
    if (plan.has_value() != expected) o.fail("verdict differs on instance " + std::to_string(i));
  }
  if (o.pass) {
    o.detail = "100 instances (" + std::to_string(feasible) + " feasible, " +
               std::to_string(100 - feasible) + " infeasible)";
  }
  return o;
}

Outcome decoupling() {
  Outcome o;
  int count = 0;
  for (const CnfFormula& f : criterion1_formulas()) {
    const auto [inst, layout] = build_instance(f);
    const auto seq = optimal_decoupling(inst, 1);
    const bool satisfiable = brute_force_sat(f).has_value();
    o.artifacts += seq ? encode_sequence(inst, *seq) : "none\n";
    if (seq.has_value() != satisfiable) o.fail("dimension-1 verdict differs\n" + serialize_dimacs(f));
    if (seq && validate_solution_sequence(inst, *seq)) o.fail("sequence does not validate");
    ++count;
  }
  const Instance swap(Workspace(2, 2, {}), {{0, "A", {0, 0}, {1, 1}, RobotRole::kLiteral},
                                            {1, "B", {1, 1}, {0, 0}, RobotRole::kLiteral}});
  if (optimal_decoupling(swap, 1)) o.fail("diagonal swap solved at dimension 1");
  const auto seq = optimal_decoupling(swap, 2);
  if (!seq) {
    o.fail("diagonal swap unsolved at dimension 2");
  } else {
    o.artifacts += encode_sequence(swap, *seq);
    if (dimension(*seq, 2) != 2 || validate_solution_sequence(swap, *seq)) {
      o.fail("bad dimension-2 sequence");
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " instances at dimension 1; swap has dimension 2";
  return o;
}

Outcome reconfiguration() {
  Outcome o;
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const DiscInstance discs = to_disc_instance(inst);
  const std::size_t obstacles = inst.workspace().obstacles().size();
  const std::size_t ring =
      2 * static_cast<std::size_t>(inst.workspace().width() + 2) + 2 * static_cast<std::size_t>(inst.workspace().height());
  if (discs.mobile_count() != 10) o.fail(std::to_string(discs.mobile_count()) + " mobile discs");
  if (obstacles != 6 || ring != 44 || discs.fixed_count() != obstacles + ring) {
    o.fail(std::to_string(discs.fixed_count()) + " fixed discs");
  }
  const auto [plan, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  const SlidePlan slides = grid_plan_to_slide_plan(inst, plan);
  const SlideReport report = validate_slide_plan(discs, slides);
  if (slides.moves.size() != 10) o.fail(std::to_string(slides.moves.size()) + " slides");
  if (!report.ok()) o.fail(to_string(*report.violation));
  o.artifacts = encode_discs({discs, slides, report});

  const DiscInstance near({{0, {0, 0}, {1, 1}, true}, {1, {1, 0}, {1, 0}, false}});
  const SlideReport near_report = validate_slide_plan(near, {{{0, {{0, 0}, {1, 1}}}}});
  if (near_report.ok() || near_report.violation->cause != SlideViolation::Cause::kCollision) {
    o.fail("near miss accepted");
  }
  const DiscInstance touch({{0, {0, 0}, {2, 0}, true}, {1, {1, 1}, {1, 1}, false}});
  if (!validate_slide_plan(touch, {{{0, {{0, 0}, {2, 0}}}}}).ok()) o.fail("tangency rejected");
  if (o.pass) o.detail = "10 mobile, 6 + 44 fixed, 10 slides valid, near miss rejected";
  return o;
}

Outcome validator_rejections() {
  Outcome o;
  const auto [inst, layout] = build_instance(testing::fig1_formula());
  const auto [good, trace] = synthesize_plan(inst, layout, {{true, false, true}});
  using C = Violation::Cause;
  // Move 3 is the verifier.
  const std::size_t vm = 3;
  // Moving the verifier before the last false-literal robot runs it into
  // that robot's start.
  const GridPos last_false = inst.robot(good.moves[vm - 1].robot).start;
  const auto& vpath = good.moves[vm].path;
  const auto blocked_at =
      static_cast<std::size_t>(std::find(vpath.begin(), vpath.end(), last_false) - vpath.begin());
  struct Case {
    std::string name;
    C cause;
    std::size_t move_index;
    std::size_t path_index;
    std::function<void(MonotonePlan&)> mutate;
  };
  const std::vector<Case> cases = {
      {"obstacle", C::kObstacle, 0, 1,
       [&](MonotonePlan& p) {
         // Step from a gadget row into the obstacle row and back.
         auto& path = p.moves[0].path;
         const GridPos s = path[0];
         path.insert(path.begin() + 1, {GridPos{s.col, kMiddleRow}, s});
       }},
      {"out-of-bounds", C::kOutOfBounds, 0, 1,
       [&](MonotonePlan& p) {
         auto& path = p.moves[0].path;
         const GridPos s = path[0];
         path.insert(path.begin() + 1, {GridPos{s.col, inst.workspace().height()}, s});
       }},
      {"stationary-robot", C::kStationaryRobot, vm - 1, blocked_at,
       [&](MonotonePlan& p) { std::swap(p.moves[vm - 1], p.moves[vm]); }},
      {"endpoint-mismatch", C::kEndpointMismatch, 5, 0,
       [&](MonotonePlan& p) { p.moves[5].path.front() = p.moves[5].path.back(); }},
      {"duplicate-robot", C::kDuplicateRobot, 10, 0,
       [&](MonotonePlan& p) { p.moves.push_back(p.moves.back()); }},
      {"missing-robot", C::kMissingRobot, 9, 0,
       [&](MonotonePlan& p) { p.moves.pop_back(); }},
  };
  std::string summary;
  for (const Case& c : cases) {
    MonotonePlan bad = good;
    c.mutate(bad);
    const auto v = validate_monotone_plan(inst, bad);
    if (!v) {
      o.fail(c.name + ": accepted");
      continue;
    }
    o.artifacts += to_string(*v) + "\n";
    const bool index_ok = v->move_index == c.move_index &&
                          (c.cause == C::kDuplicateRobot || c.cause == C::kMissingRobot ||
                           v->path_index == c.path_index);
    if (v->cause != c.cause || !index_ok) o.fail(c.name + ": got " + to_string(*v));
    if (!summary.empty()) summary += ", ";
    summary += c.name;
  }
  if (o.pass) o.detail = summary;
  return o;
}

using Criterion = Outcome (*)();

const std::vector<std::pair<std::string, Criterion>>& deterministic_criteria() {
  static const std::vector<std::pair<std::string, Criterion>> list = {
      {"reduction equivalence on small formulas", reduction_equivalence},
      {"worked example move order", figure1},
      {"infeasibility witness", infeasibility_witness},
      {"extraction soundness", extraction_soundness},
      {"solver matches permutation oracle", solver_oracle},
      {"decoupling", decoupling},
      {"disc reconfiguration", reconfiguration},
  };
  return list;
}

Outcome guarded(Criterion run) {
  try {
    return run();
  } catch (const std::exception& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return o;
  }
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int number, const std::string& name, const Outcome& o) {
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  std::vector<std::string> first_run;
  int number = 1;
  for (const auto& [name, run] : deterministic_criteria()) {
    const Outcome o = guarded(run);
    first_run.push_back(o.artifacts);
    report(number++, name, o);
  }
  report(number++, "validator rejection suite", guarded(validator_rejections));

  Outcome determinism;
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < first_run.size(); ++i) {
    const Outcome again = guarded(deterministic_criteria()[i].second);
    bytes += again.artifacts.size();
    if (again.artifacts != first_run[i]) determinism.fail("criterion " + std::to_string(i + 1) + " differs");
    if (again.artifacts.empty()) determinism.fail("criterion " + std::to_string(i + 1) + " produced nothing");
  }
  if (determinism.pass) determinism.detail = std::to_string(bytes) + " bytes identical across two runs";
  report(number, "determinism", determinism);
  return all ? 0 : 1;
}
