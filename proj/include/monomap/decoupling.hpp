#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monomap/grid.hpp"
#include "monomap/planning.hpp"

namespace monomap {

// Ordered partition of the robots. Group i moves while groups before it sit
// at their targets and groups after it sit at their starts.
struct SolutionSequence {
  std::vector<std::vector<int>> groups;

  friend bool operator==(const SolutionSequence&, const SolutionSequence&) = default;
};

// Throws InvalidArgument unless the groups are nonempty, pairwise disjoint
// and cover robots 0..robot_count-1.
void check_partition(const SolutionSequence& sequence, int robot_count);

// Size of the largest group. Throws like check_partition.
int dimension(const SolutionSequence& sequence, int robot_count);

inline constexpr int kDefaultGroupCap = 3;
inline constexpr int kDefaultDecouplingCap = 8;

struct DecouplingOptions {
  int max_group_size = kDefaultGroupCap;     // joint search limit
  int max_robots = kDefaultDecouplingCap;    // exhaustive search limit for max_dim >= 2
  SolverOptions solver;                      // used for max_dim == 1
};

// True if `group` can reach its targets amid `static_cells`. Robots of the
// group take single-cell steps one at a time and may interleave and move
// repeatedly; the search is breadth-first over the joint configuration.
bool group_feasible(const Instance& instance, const std::vector<int>& group,
                    const CellMask& static_cells);

// Returns the index of the first group that cannot reach its targets, or
// nullopt when the sequence is a solution sequence. Throws InvalidArgument
// for a malformed partition and CapacityError for a group larger than
// options.max_group_size.
std::optional<std::size_t> validate_solution_sequence(const Instance& instance,
                                                      const SolutionSequence& sequence,
                                                      const DecouplingOptions& options = {});

// Finds a solution sequence of dimension at most max_dim, or nullopt.
// max_dim == 1 is monotone feasibility and uses solve_monotone. Larger
// bounds search ordered partitions exhaustively: groups are tried by size,
// then lexicographically, and sets of finished robots known to be dead
// ends are remembered. Throws CapacityError past the configured limits and
// InvalidArgument for max_dim < 1.
std::optional<SolutionSequence> optimal_decoupling(const Instance& instance, int max_dim,
                                                   const DecouplingOptions& options = {});

}  // namespace monomap
