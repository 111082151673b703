#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monomap {

// A cell of the unit grid. Columns grow rightward, rows grow downward.
struct GridPos {
  int col = 0;
  int row = 0;

  friend constexpr auto operator<=>(const GridPos&, const GridPos&) = default;
};

constexpr bool adjacent4(GridPos a, GridPos b) {
  const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  return dc + dr == 1;
}

std::string to_string(GridPos p);

// Rectangular portion of the grid with immovable obstacle cells.
class Workspace {
 public:
  Workspace() : Workspace(1, 1, {}) {}
  // Throws InvalidArgument on non-positive size or out-of-bounds obstacles.
  // Duplicate obstacles are merged; the stored list is sorted.
  Workspace(int width, int height, std::vector<GridPos> obstacles);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t cell_count() const noexcept { return static_cast<std::size_t>(width_) * height_; }
  const std::vector<GridPos>& obstacles() const noexcept { return obstacles_; }

  bool in_bounds(GridPos p) const noexcept {
    return p.col >= 0 && p.row >= 0 && p.col < width_ && p.row < height_;
  }
  bool is_obstacle(GridPos p) const noexcept { return in_bounds(p) && blocked_[index(p)] != 0; }
  bool is_free(GridPos p) const noexcept { return in_bounds(p) && blocked_[index(p)] == 0; }

  std::size_t index(GridPos p) const noexcept {
    return static_cast<std::size_t>(p.row) * width_ + p.col;
  }
  GridPos cell(std::size_t index) const noexcept {
    return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
  }

  friend bool operator==(const Workspace& a, const Workspace& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.obstacles_ == b.obstacles_;
  }

 private:
  int width_;
  int height_;
  std::vector<GridPos> obstacles_;
  std::vector<std::uint8_t> blocked_;
};

enum class RobotRole { kLiteral, kVerifier };

std::string_view to_string(RobotRole role);

struct Robot {
  int id = 0;
  std::string label;
  GridPos start;
  GridPos target;
  RobotRole role = RobotRole::kLiteral;

  friend bool operator==(const Robot&, const Robot&) = default;
};

// A workspace with labeled robots. Robot ids are dense and equal list order.
class Instance {
 public:
  Instance() = default;
  // Throws InvalidArgument if any invariant is broken: ids not 0..n-1 in
  // order, endpoints out of bounds or on obstacles, repeated starts or
  // targets, or more than one verifier.
  Instance(Workspace workspace, std::vector<Robot> robots);

  const Workspace& workspace() const noexcept { return workspace_; }
  const std::vector<Robot>& robots() const noexcept { return robots_; }
  const Robot& robot(int id) const;
  int size() const noexcept { return static_cast<int>(robots_.size()); }
  // Id of the verifier robot, if there is one.
  std::optional<int> verifier() const noexcept;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Workspace workspace_;
  std::vector<Robot> robots_;
};

// Consecutive cells are 4-adjacent. A single cell means "stay put".
using Path = std::vector<GridPos>;

// True if `path` is nonempty, in bounds, obstacle-free and 4-connected.
bool is_valid_path(const Workspace& workspace, const Path& path);

struct Move {
  int robot = 0;
  Path path;

  friend bool operator==(const Move&, const Move&) = default;
};

// Each robot moves once, in list order.
struct MonotonePlan {
  std::vector<Move> moves;

  friend bool operator==(const MonotonePlan&, const MonotonePlan&) = default;
};

// Per-cell boolean mask over a workspace.
class CellMask {
 public:
  explicit CellMask(const Workspace& workspace)
      : width_(workspace.width()), bits_(workspace.cell_count(), 0) {}

  void set(GridPos p, bool value = true) { bits_[index(p)] = value ? 1 : 0; }
  bool test(GridPos p) const { return bits_[index(p)] != 0; }

 private:
  std::size_t index(GridPos p) const { return static_cast<std::size_t>(p.row) * width_ + p.col; }

  int width_;
  std::vector<std::uint8_t> bits_;
};

// Breadth-first search for a minimum-length 4-connected path that avoids
// obstacles and occupied cells. Neighbors are expanded right, down, up,
// left, so the result is deterministic. Returns nullopt when `to` is not
// reachable. Throws InvalidArgument if an endpoint is out of bounds, an
// obstacle, or occupied.
std::optional<Path> shortest_path(const Workspace& workspace, GridPos from, GridPos to,
                                  std::span<const GridPos> occupied);
std::optional<Path> shortest_path(const Workspace& workspace, GridPos from, GridPos to,
                                  const CellMask& occupied);

// Reachability only; same semantics as shortest_path without building a path.
bool reachable(const Workspace& workspace, GridPos from, GridPos to, const CellMask& occupied);

struct Violation {
  enum class Cause {
    kObstacle,
    kOutOfBounds,
    kStationaryRobot,
    kDuplicateRobot,
    kMissingRobot,
    kEndpointMismatch,
    kNotAdjacent,
  };

  Cause cause = Cause::kObstacle;
  std::size_t move_index = 0;  // plan.moves.size() for a missing robot
  std::size_t path_index = 0;
  GridPos cell;
  int robot = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view to_string(Violation::Cause cause);
std::string to_string(const Violation& v);

// Simulates the plan: robots that have not moved sit at their starts,
// robots that have moved sit at their targets. Returns the first violation
// or nullopt if the plan is a valid monotone motion plan. Throws
// InvalidArgument for robot ids outside the instance.
std::optional<Violation> validate_monotone_plan(const Instance& instance, const MonotonePlan& plan);

}  // namespace monomap
