#include "monomap/decoupling.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>

#include "monomap/error.hpp"

namespace monomap {

void check_partition(const SolutionSequence& sequence, int robot_count) {
  std::vector<bool> seen(static_cast<std::size_t>(robot_count), false);
  int covered = 0;
  for (std::size_t g = 0; g < sequence.groups.size(); ++g) {
    if (sequence.groups[g].empty()) {
      throw InvalidArgument("group " + std::to_string(g) + " is empty");
    }
    for (int id : sequence.groups[g]) {
      if (id < 0 || id >= robot_count) {
        throw InvalidArgument("unknown robot id " + std::to_string(id));
      }
      if (seen[static_cast<std::size_t>(id)]) {
        throw InvalidArgument("robot " + std::to_string(id) + " appears in more than one group");
      }
      seen[static_cast<std::size_t>(id)] = true;
      ++covered;
    }
  }
  if (covered != robot_count) {
    throw InvalidArgument("partition covers " + std::to_string(covered) + " of " +
                          std::to_string(robot_count) + " robots");
  }
}

int dimension(const SolutionSequence& sequence, int robot_count) {
  check_partition(sequence, robot_count);
  std::size_t largest = 0;
  for (const auto& group : sequence.groups) largest = std::max(largest, group.size());
  return static_cast<int>(largest);
}

bool group_feasible(const Instance& instance, const std::vector<int>& group,
                    const CellMask& static_cells) {
  const Workspace& ws = instance.workspace();
  const std::uint64_t cells = ws.cell_count();
  const std::size_t k = group.size();

  std::vector<std::size_t> start(k);
  std::vector<std::size_t> goal(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Robot& r = instance.robot(group[i]);
    if (static_cells.test(r.start) || static_cells.test(r.target)) return false;
    start[i] = ws.index(r.start);
    goal[i] = ws.index(r.target);
  }
  auto encode = [&](const std::vector<std::size_t>& config) {
    std::uint64_t key = 0;
    for (std::size_t i = k; i-- > 0;) key = key * cells + config[i];
    return key;
  };
  const std::uint64_t goal_key = encode(goal);
  std::unordered_set<std::uint64_t> seen{encode(start)};
  std::deque<std::vector<std::size_t>> queue{start};
  constexpr int kSteps[4][2] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
  while (!queue.empty()) {
    std::vector<std::size_t> config = std::move(queue.front());
    queue.pop_front();
    if (encode(config) == goal_key) return true;
    for (std::size_t i = 0; i < k; ++i) {
      const GridPos here = ws.cell(config[i]);
      for (const auto& step : kSteps) {
        const GridPos next{here.col + step[0], here.row + step[1]};
        if (!ws.is_free(next) || static_cells.test(next)) continue;
        const std::size_t ni = ws.index(next);
        if (std::find(config.begin(), config.end(), ni) != config.end()) continue;
        std::vector<std::size_t> succ = config;
        succ[i] = ni;
        if (seen.insert(encode(succ)).second) queue.push_back(std::move(succ));
      }
    }
  }
  return false;
}

namespace {

CellMask static_cells_for(const Instance& instance, const std::vector<bool>& finished,
                          const std::vector<int>& group) {
  CellMask cells(instance.workspace());
  for (const Robot& r : instance.robots()) {
    if (std::find(group.begin(), group.end(), r.id) != group.end()) continue;
    cells.set(finished[static_cast<std::size_t>(r.id)] ? r.target : r.start);
  }
  return cells;
}

}  // namespace

std::optional<std::size_t> validate_solution_sequence(const Instance& instance,
                                                      const SolutionSequence& sequence,
                                                      const DecouplingOptions& options) {
  check_partition(sequence, instance.size());
  for (const auto& group : sequence.groups) {
    if (static_cast<int>(group.size()) > options.max_group_size) {
      throw CapacityError("group of " + std::to_string(group.size()) +
                          " robots exceeds joint search cap " +
                          std::to_string(options.max_group_size));
    }
  }
  std::vector<bool> finished(static_cast<std::size_t>(instance.size()), false);
  for (std::size_t g = 0; g < sequence.groups.size(); ++g) {
    const auto& group = sequence.groups[g];
    if (!group_feasible(instance, group, static_cells_for(instance, finished, group))) return g;
    for (int id : group) finished[static_cast<std::size_t>(id)] = true;
  }
  return std::nullopt;
}

std::optional<SolutionSequence> optimal_decoupling(const Instance& instance, int max_dim,
                                                   const DecouplingOptions& options) {
  if (max_dim < 1) throw InvalidArgument("dimension bound must be at least 1");
  const int n = instance.size();
  if (max_dim == 1) {
    auto plan = solve_monotone(instance, options.solver);
    if (!plan) return std::nullopt;
    SolutionSequence sequence;
    for (const Move& move : plan->moves) sequence.groups.push_back({move.robot});
    return sequence;
  }
  if (n > options.max_robots) {
    throw CapacityError("exhaustive decoupling limited to " + std::to_string(options.max_robots) +
                        " robots, instance has " + std::to_string(n));
  }
  const int largest = std::min(max_dim, n);
  if (largest > options.max_group_size) {
    throw CapacityError("dimension bound " + std::to_string(largest) +
                        " exceeds joint search cap " + std::to_string(options.max_group_size));
  }

  using Mask = std::uint32_t;
  const Mask full = (Mask{1} << n) - 1;
  std::unordered_set<Mask> dead;
  SolutionSequence sequence;
  std::vector<bool> finished(static_cast<std::size_t>(n), false);

  std::function<bool(Mask)> search = [&](Mask done) -> bool {
    if (done == full) return true;
    if (dead.contains(done)) return false;
    std::vector<int> remaining;
    for (int r = 0; r < n; ++r) {
      if (!(done >> r & 1U)) remaining.push_back(r);
    }
    const int m = static_cast<int>(remaining.size());
    for (int size = 1; size <= std::min(largest, m); ++size) {
      // Lexicographic combinations of `size` indices into `remaining`.
      std::vector<int> pick(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<int> group;
        Mask bits = 0;
        for (int i : pick) {
          group.push_back(remaining[static_cast<std::size_t>(i)]);
          bits |= Mask{1} << remaining[static_cast<std::size_t>(i)];
        }
        if (group_feasible(instance, group, static_cells_for(instance, finished, group))) {
          for (int id : group) finished[static_cast<std::size_t>(id)] = true;
          sequence.groups.push_back(group);
          if (search(done | bits)) return true;
          sequence.groups.pop_back();
          for (int id : group) finished[static_cast<std::size_t>(id)] = false;
        }
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) {
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
    dead.insert(done);
    return false;
  };

  if (!search(0)) return std::nullopt;
  return sequence;
}

}  // namespace monomap
