#include "monomap/grid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "monomap/error.hpp"

namespace monomap {

std::string to_string(GridPos p) {
  return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
}

Workspace::Workspace(int width, int height, std::vector<GridPos> obstacles)
    : width_(width), height_(height), obstacles_(std::move(obstacles)) {
  if (width_ < 1 || height_ < 1) {
    throw InvalidArgument("workspace must be at least 1x1");
  }
  std::sort(obstacles_.begin(), obstacles_.end());
  obstacles_.erase(std::unique(obstacles_.begin(), obstacles_.end()), obstacles_.end());
  blocked_.assign(cell_count(), 0);
  for (const GridPos& p : obstacles_) {
    if (!in_bounds(p)) {
      throw InvalidArgument("obstacle " + to_string(p) + " out of bounds");
    }
    blocked_[index(p)] = 1;
  }
}

std::string_view to_string(RobotRole role) {
  return role == RobotRole::kVerifier ? "verifier" : "literal";
}

Instance::Instance(Workspace workspace, std::vector<Robot> robots)
    : workspace_(std::move(workspace)), robots_(std::move(robots)) {
  std::set<GridPos> starts;
  std::set<GridPos> targets;
  int verifiers = 0;
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    const Robot& r = robots_[i];
    if (r.id != static_cast<int>(i)) {
      throw InvalidArgument("robot ids must be 0..n-1 in list order");
    }
    for (GridPos p : {r.start, r.target}) {
      if (!workspace_.in_bounds(p)) {
        throw InvalidArgument("robot " + std::to_string(r.id) + " endpoint " + to_string(p) +
                              " out of bounds");
      }
      if (workspace_.is_obstacle(p)) {
        throw InvalidArgument("robot " + std::to_string(r.id) + " endpoint " + to_string(p) +
                              " is an obstacle");
      }
    }
    if (!starts.insert(r.start).second) {
      throw InvalidArgument("duplicate start " + to_string(r.start));
    }
    if (!targets.insert(r.target).second) {
      throw InvalidArgument("duplicate target " + to_string(r.target));
    }
    if (r.role == RobotRole::kVerifier && ++verifiers > 1) {
      throw InvalidArgument("at most one verifier robot is allowed");
    }
  }
}

const Robot& Instance::robot(int id) const {
  if (id < 0 || id >= size()) {
    throw InvalidArgument("unknown robot id " + std::to_string(id));
  }
  return robots_[static_cast<std::size_t>(id)];
}

std::optional<int> Instance::verifier() const noexcept {
  for (const Robot& r : robots_) {
    if (r.role == RobotRole::kVerifier) return r.id;
  }
  return std::nullopt;
}

bool is_valid_path(const Workspace& workspace, const Path& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!workspace.is_free(path[i])) return false;
    if (i > 0 && !adjacent4(path[i - 1], path[i])) return false;
  }
  return true;
}

namespace {

// right, down, up, left
constexpr std::array<GridPos, 4> kSteps{{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}};

void check_endpoint(const Workspace& workspace, GridPos p, const CellMask& occupied) {
  if (!workspace.in_bounds(p)) {
    throw InvalidArgument("endpoint " + to_string(p) + " out of bounds");
  }
  if (workspace.is_obstacle(p)) {
    throw InvalidArgument("endpoint " + to_string(p) + " is an obstacle");
  }
  if (occupied.test(p)) {
    throw InvalidArgument("endpoint " + to_string(p) + " is occupied");
  }
}

// Returns the BFS parent table (SIZE_MAX = unvisited), or empty if `to`
// was not reached.
std::vector<std::size_t> bfs(const Workspace& workspace, GridPos from, GridPos to,
                             const CellMask& occupied) {
  check_endpoint(workspace, from, occupied);
  check_endpoint(workspace, to, occupied);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(workspace.cell_count(), kUnseen);
  const std::size_t source = workspace.index(from);
  const std::size_t goal = workspace.index(to);
  parent[source] = source;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == goal) return parent;
    const GridPos here = workspace.cell(cur);
    for (GridPos step : kSteps) {
      const GridPos next{here.col + step.col, here.row + step.row};
      if (!workspace.is_free(next) || occupied.test(next)) continue;
      const std::size_t ni = workspace.index(next);
      if (parent[ni] != kUnseen) continue;
      parent[ni] = cur;
      queue.push_back(ni);
    }
  }
  return {};
}

}  // namespace

std::optional<Path> shortest_path(const Workspace& workspace, GridPos from, GridPos to,
                                  const CellMask& occupied) {
  const std::vector<std::size_t> parent = bfs(workspace, from, to, occupied);
  if (parent.empty()) return std::nullopt;
  Path path;
  std::size_t cur = workspace.index(to);
  const std::size_t source = workspace.index(from);
  while (cur != source) {
    path.push_back(workspace.cell(cur));
    cur = parent[cur];
  }
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Path> shortest_path(const Workspace& workspace, GridPos from, GridPos to,
                                  std::span<const GridPos> occupied) {
  CellMask mask(workspace);
  for (GridPos p : occupied) {
    if (workspace.in_bounds(p)) mask.set(p);
  }
  return shortest_path(workspace, from, to, mask);
}

bool reachable(const Workspace& workspace, GridPos from, GridPos to, const CellMask& occupied) {
  return !bfs(workspace, from, to, occupied).empty();
}

std::string_view to_string(Violation::Cause cause) {
  switch (cause) {
    case Violation::Cause::kObstacle: return "obstacle";
    case Violation::Cause::kOutOfBounds: return "out-of-bounds";
    case Violation::Cause::kStationaryRobot: return "stationary-robot";
    case Violation::Cause::kDuplicateRobot: return "duplicate-robot";
    case Violation::Cause::kMissingRobot: return "missing-robot";
    case Violation::Cause::kEndpointMismatch: return "endpoint-mismatch";
    case Violation::Cause::kNotAdjacent: return "not-adjacent";
  }
  return "unknown";
}

std::string to_string(const Violation& v) {
  return "move " + std::to_string(v.move_index) + " path " + std::to_string(v.path_index) +
         " cell " + to_string(v.cell) + " robot " + std::to_string(v.robot) + " " +
         std::string(to_string(v.cause));
}

std::optional<Violation> validate_monotone_plan(const Instance& instance,
                                                const MonotonePlan& plan) {
  using Cause = Violation::Cause;
  const Workspace& ws = instance.workspace();
  // Occupant of each cell, -1 when empty.
  std::vector<int> occupant(ws.cell_count(), -1);
  for (const Robot& r : instance.robots()) occupant[ws.index(r.start)] = r.id;
  std::vector<bool> moved(static_cast<std::size_t>(instance.size()), false);

  for (std::size_t m = 0; m < plan.moves.size(); ++m) {
    const Move& move = plan.moves[m];
    const Robot& robot = instance.robot(move.robot);
    auto fail = [&](Cause cause, std::size_t index, GridPos cell) {
      return Violation{cause, m, index, cell, robot.id};
    };
    if (moved[static_cast<std::size_t>(robot.id)]) {
      return fail(Cause::kDuplicateRobot, 0, move.path.empty() ? robot.target : move.path.front());
    }
    if (move.path.empty() || move.path.front() != robot.start) {
      return fail(Cause::kEndpointMismatch, 0, move.path.empty() ? robot.start : move.path.front());
    }
    for (std::size_t i = 0; i < move.path.size(); ++i) {
      const GridPos p = move.path[i];
      if (!ws.in_bounds(p)) return fail(Cause::kOutOfBounds, i, p);
      if (ws.is_obstacle(p)) return fail(Cause::kObstacle, i, p);
      if (i > 0 && !adjacent4(move.path[i - 1], p)) return fail(Cause::kNotAdjacent, i, p);
      const int who = occupant[ws.index(p)];
      if (who != -1 && who != robot.id) return fail(Cause::kStationaryRobot, i, p);
    }
    if (move.path.back() != robot.target) {
      return fail(Cause::kEndpointMismatch, move.path.size() - 1, move.path.back());
    }
    occupant[ws.index(robot.start)] = -1;
    occupant[ws.index(robot.target)] = robot.id;
    moved[static_cast<std::size_t>(robot.id)] = true;
  }
  for (const Robot& r : instance.robots()) {
    if (!moved[static_cast<std::size_t>(r.id)]) {
      return Violation{Cause::kMissingRobot, plan.moves.size(), 0, r.start, r.id};
    }
  }
  return std::nullopt;
}

}  // namespace monomap
