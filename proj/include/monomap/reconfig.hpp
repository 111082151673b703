#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monomap/grid.hpp"

namespace monomap {

// Integer lattice point. Cell (c, r) maps to center (c, r).
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Polyline vertex. Lattice-aligned plans use integral coordinates.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

// All discs have diameter 1: two discs overlap iff their centers are closer
// than 1. Touching is allowed.
inline constexpr double kDiscRadius = 0.5;

struct Disc {
  int id = 0;
  LatticePoint start;
  LatticePoint target;
  bool mobile = true;

  friend bool operator==(const Disc&, const Disc&) = default;
};

class DiscInstance {
 public:
  DiscInstance() = default;
  // Throws InvalidArgument if ids are not 0..n-1 in order, starts or targets
  // repeat, or a fixed disc has start != target.
  explicit DiscInstance(std::vector<Disc> discs);

  const std::vector<Disc>& discs() const noexcept { return discs_; }
  std::size_t mobile_count() const noexcept;
  std::size_t fixed_count() const noexcept { return discs_.size() - mobile_count(); }

 private:
  std::vector<Disc> discs_;
};

struct Slide {
  int disc = 0;
  std::vector<Point2> polyline;

  friend bool operator==(const Slide&, const Slide&) = default;
};

struct SlidePlan {
  std::vector<Slide> moves;

  friend bool operator==(const SlidePlan&, const SlidePlan&) = default;
};

// Robots become mobile discs with the same ids. Obstacle cells and the
// one-cell ring around the workspace become fixed discs, numbered after the
// robots: obstacles in sorted order, then the ring's top row, bottom row,
// left column and right column.
DiscInstance to_disc_instance(const Instance& instance);

// Each move of a valid plan becomes one slide through the path's cell
// centers. Robots whose start equals their target are left out. Throws
// InvalidArgument when the plan does not validate on `instance`.
SlidePlan grid_plan_to_slide_plan(const Instance& instance, const MonotonePlan& plan);

// Reverse conversion for lattice-aligned plans: every vertex integral and
// every segment axis-parallel. Returns nullopt if the slide plan is not of
// that shape or moves a disc twice. Discs of robots that never slide get a
// single-cell path.
std::optional<MonotonePlan> slide_plan_to_grid_plan(const Instance& instance, const SlidePlan& plan);

struct SlideViolation {
  enum class Cause { kCollision, kFixedDiscMoved, kNotAtTarget };

  Cause cause = Cause::kCollision;
  std::size_t move_index = 0;
  std::size_t segment_index = 0;
  int disc = 0;
  int other_disc = -1;

  friend bool operator==(const SlideViolation&, const SlideViolation&) = default;
};

std::string_view to_string(SlideViolation::Cause cause);
std::string to_string(const SlideViolation& v);

struct SlideReport {
  std::optional<SlideViolation> violation;
  std::size_t move_count = 0;

  bool ok() const noexcept { return !violation; }
};

// Exact clearance test: is the squared distance from `p` to segment ab at
// least 1? Integer arithmetic only.
bool segment_clears_point(LatticePoint a, LatticePoint b, LatticePoint p);

// Squared distance from `p` to segment ab in floating point.
double segment_point_distance_sq(Point2 a, Point2 b, Point2 p);

inline constexpr double kSlideTolerance = 1e-9;

// Replays the slides in order. Every moving center must keep squared
// distance >= 1 from every stationary center, and every disc must end at
// its target. Plans whose vertices are all integral are checked exactly;
// others use kSlideTolerance on squared distances. Throws InvalidArgument
// for unknown disc ids, empty polylines and polylines that do not start
// at the disc's current center.
SlideReport validate_slide_plan(const DiscInstance& instance, const SlidePlan& plan);

}  // namespace monomap
