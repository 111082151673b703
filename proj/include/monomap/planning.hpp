#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "monomap/grid.hpp"
#include "monomap/reduction.hpp"
#include "monomap/sat.hpp"

namespace monomap {

// Witness data of a synthesized plan.
struct SynthesisTrace {
  Path verifier_path;                       // weakly x-monotone
  std::vector<int> true_set;                // literal robots true under the assignment
  std::vector<int> false_set;               // literal robots false under the assignment
  std::vector<GridPos> chosen_clause_targets;  // per clause, the cell the verifier crosses
};

// Builds a monotone plan for a reduction instance from a satisfying
// assignment: false-literal robots first (right to left by source), then
// the verifier, then true-literal robots (right to left by target, top
// first within a column). Throws InvalidArgument if the assignment has the
// wrong size or leaves a clause unsatisfied.
std::pair<MonotonePlan, SynthesisTrace> synthesize_plan(const Instance& instance,
                                                        const ReductionLayout& layout,
                                                        const Assignment& assignment);

// Reads an assignment off a valid plan on a reduction instance: literals of
// robots that move after the verifier are true, every other variable is
// false. Throws InvalidArgument if the plan does not validate and
// InconsistencyError if both polarities of a variable move after the
// verifier.
Assignment extract_assignment(const Instance& instance, const ReductionLayout& layout,
                              const MonotonePlan& plan);

inline constexpr int kDefaultSolverCap = 24;
inline constexpr int kMaxSolverCap = 63;

struct SolverOptions {
  int max_robots = kDefaultSolverCap;
};

struct SolverStats {
  std::uint64_t states_visited = 0;
  std::uint64_t dead_states = 0;
};

// Complete decision procedure for monotone feasibility.
//
// After any prefix of a monotone plan, moved robots sit at their targets and
// the rest at their starts, so the world is determined by the set of moved
// robots. The search walks that subset lattice depth-first, trying robots
// in index order, and remembers sets from which no completion exists.
// Each set is first analyzed for forced orderings between unmoved robots
// (a robot whose every route is cut by another's start or target must move
// after or before it); contradictory orderings mark the set dead, and
// robots with a pending predecessor are not tried.
//
// Returns the first plan in robot-index order, or nullopt if infeasible.
// Throws CapacityError when the instance has more than
// options.max_robots robots (or more than kMaxSolverCap).
std::optional<MonotonePlan> solve_monotone(const Instance& instance,
                                           const SolverOptions& options = {},
                                           SolverStats* stats = nullptr);

// Materializes a plan for the given move order using shortest paths.
// Returns nullopt if some robot has no path at its turn.
std::optional<MonotonePlan> plan_for_order(const Instance& instance, const std::vector<int>& order);

}  // namespace monomap
