#include "monomap/reconfig.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "monomap/error.hpp"

namespace monomap {

DiscInstance::DiscInstance(std::vector<Disc> discs) : discs_(std::move(discs)) {
  std::set<LatticePoint> starts;
  std::set<LatticePoint> targets;
  for (std::size_t i = 0; i < discs_.size(); ++i) {
    const Disc& d = discs_[i];
    if (d.id != static_cast<int>(i)) throw InvalidArgument("disc ids must be 0..n-1 in order");
    if (!d.mobile && d.start != d.target) {
      throw InvalidArgument("fixed disc " + std::to_string(d.id) + " must have start == target");
    }
    if (!starts.insert(d.start).second) throw InvalidArgument("overlapping disc starts");
    if (!targets.insert(d.target).second) throw InvalidArgument("overlapping disc targets");
  }
}

std::size_t DiscInstance::mobile_count() const noexcept {
  std::size_t count = 0;
  for (const Disc& d : discs_) count += d.mobile ? 1 : 0;
  return count;
}

namespace {

LatticePoint center(GridPos p) { return {p.col, p.row}; }

bool integral(double v) { return std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 1e15; }

LatticePoint to_lattice(Point2 p) {
  return {static_cast<std::int64_t>(p.x), static_cast<std::int64_t>(p.y)};
}

Point2 to_point(LatticePoint p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

}  // namespace

DiscInstance to_disc_instance(const Instance& instance) {
  std::vector<Disc> discs;
  for (const Robot& r : instance.robots()) {
    discs.push_back({r.id, center(r.start), center(r.target), true});
  }
  auto add_fixed = [&](LatticePoint p) {
    discs.push_back({static_cast<int>(discs.size()), p, p, false});
  };
  for (GridPos p : instance.workspace().obstacles()) add_fixed(center(p));
  const std::int64_t w = instance.workspace().width();
  const std::int64_t h = instance.workspace().height();
  for (std::int64_t x = -1; x <= w; ++x) add_fixed({x, -1});
  for (std::int64_t x = -1; x <= w; ++x) add_fixed({x, h});
  for (std::int64_t y = 0; y < h; ++y) add_fixed({-1, y});
  for (std::int64_t y = 0; y < h; ++y) add_fixed({w, y});
  return DiscInstance(std::move(discs));
}

SlidePlan grid_plan_to_slide_plan(const Instance& instance, const MonotonePlan& plan) {
  if (auto violation = validate_monotone_plan(instance, plan)) {
    throw InvalidArgument("source plan does not validate: " + to_string(*violation));
  }
  SlidePlan slides;
  for (const Move& move : plan.moves) {
    const Robot& r = instance.robot(move.robot);
    if (r.start == r.target) continue;
    Slide slide{move.robot, {}};
    for (GridPos p : move.path) slide.polyline.push_back(to_point(center(p)));
    slides.moves.push_back(std::move(slide));
  }
  return slides;
}

std::optional<MonotonePlan> slide_plan_to_grid_plan(const Instance& instance,
                                                    const SlidePlan& plan) {
  std::vector<bool> moved(static_cast<std::size_t>(instance.size()), false);
  MonotonePlan grid;
  for (const Slide& slide : plan.moves) {
    if (slide.disc < 0 || slide.disc >= instance.size() || slide.polyline.empty()) {
      return std::nullopt;
    }
    if (moved[static_cast<std::size_t>(slide.disc)]) return std::nullopt;
    moved[static_cast<std::size_t>(slide.disc)] = true;
    Path path;
    for (const Point2& v : slide.polyline) {
      if (!integral(v.x) || !integral(v.y)) return std::nullopt;
      const GridPos cell{static_cast<int>(v.x), static_cast<int>(v.y)};
      if (path.empty()) {
        path.push_back(cell);
        continue;
      }
      const GridPos from = path.back();
      if (from.col != cell.col && from.row != cell.row) return std::nullopt;
      const int dc = cell.col > from.col ? 1 : (cell.col < from.col ? -1 : 0);
      const int dr = cell.row > from.row ? 1 : (cell.row < from.row ? -1 : 0);
      GridPos cur = from;
      while (cur != cell) {
        cur = {cur.col + dc, cur.row + dr};
        path.push_back(cur);
      }
    }
    grid.moves.push_back({slide.disc, std::move(path)});
  }
  for (const Robot& r : instance.robots()) {
    if (moved[static_cast<std::size_t>(r.id)]) continue;
    if (r.start != r.target) return std::nullopt;
    grid.moves.push_back({r.id, {r.start}});
  }
  return grid;
}

std::string_view to_string(SlideViolation::Cause cause) {
  switch (cause) {
    case SlideViolation::Cause::kCollision: return "collision";
    case SlideViolation::Cause::kFixedDiscMoved: return "fixed-disc-moved";
    case SlideViolation::Cause::kNotAtTarget: return "not-at-target";
  }
  return "unknown";
}

std::string to_string(const SlideViolation& v) {
  std::string out = "move " + std::to_string(v.move_index) + " segment " +
                    std::to_string(v.segment_index) + " disc " + std::to_string(v.disc);
  if (v.other_disc >= 0) out += " other " + std::to_string(v.other_disc);
  return out + " " + std::string(to_string(v.cause));
}

bool segment_clears_point(LatticePoint a, LatticePoint b, LatticePoint p) {
  const std::int64_t dx = b.x - a.x;
  const std::int64_t dy = b.y - a.y;
  const std::int64_t wx = p.x - a.x;
  const std::int64_t wy = p.y - a.y;
  const std::int64_t len_sq = dx * dx + dy * dy;
  const std::int64_t along = wx * dx + wy * dy;
  if (len_sq == 0 || along <= 0) return wx * wx + wy * wy >= 1;
  if (along >= len_sq) {
    const std::int64_t ux = p.x - b.x;
    const std::int64_t uy = p.y - b.y;
    return ux * ux + uy * uy >= 1;
  }
  // Interior foot: distance^2 = cross^2 / len_sq.
  const std::int64_t cross = dx * wy - dy * wx;
  return cross * cross >= len_sq;
}

double segment_point_distance_sq(Point2 a, Point2 b, Point2 p) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len_sq = dx * dx + dy * dy;
  double t = 0.0;
  if (len_sq > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq, 0.0, 1.0);
  const double cx = a.x + t * dx - p.x;
  const double cy = a.y + t * dy - p.y;
  return cx * cx + cy * cy;
}

SlideReport validate_slide_plan(const DiscInstance& instance, const SlidePlan& plan) {
  using Cause = SlideViolation::Cause;
  const auto& discs = instance.discs();
  std::vector<Point2> position;
  for (const Disc& d : discs) position.push_back(to_point(d.start));

  bool exact = true;
  for (const Slide& slide : plan.moves) {
    for (const Point2& v : slide.polyline) exact = exact && integral(v.x) && integral(v.y);
  }

  SlideReport report;
  report.move_count = plan.moves.size();
  for (std::size_t m = 0; m < plan.moves.size(); ++m) {
    const Slide& slide = plan.moves[m];
    if (slide.disc < 0 || slide.disc >= static_cast<int>(discs.size())) {
      throw InvalidArgument("unknown disc id " + std::to_string(slide.disc));
    }
    if (slide.polyline.empty()) {
      throw InvalidArgument("move " + std::to_string(m) + " has an empty polyline");
    }
    const auto id = static_cast<std::size_t>(slide.disc);
    if (slide.polyline.front() != position[id]) {
      throw InvalidArgument("move " + std::to_string(m) + " does not start at disc " +
                            std::to_string(slide.disc) + "'s center");
    }
    if (!discs[id].mobile) {
      report.violation = SlideViolation{Cause::kFixedDiscMoved, m, 0, slide.disc, -1};
      return report;
    }
    const std::size_t segments = slide.polyline.size() == 1 ? 1 : slide.polyline.size() - 1;
    for (std::size_t s = 0; s < segments; ++s) {
      const Point2 a = slide.polyline[s];
      const Point2 b = slide.polyline[std::min(s + 1, slide.polyline.size() - 1)];
      for (std::size_t o = 0; o < discs.size(); ++o) {
        if (o == id) continue;
        const bool clear =
            exact ? segment_clears_point(to_lattice(a), to_lattice(b), to_lattice(position[o]))
                  : segment_point_distance_sq(a, b, position[o]) >= 1.0 - kSlideTolerance;
        if (!clear) {
          report.violation = SlideViolation{Cause::kCollision, m, s, slide.disc, static_cast<int>(o)};
          return report;
        }
      }
    }
    position[id] = slide.polyline.back();
  }
  for (const Disc& d : discs) {
    if (position[static_cast<std::size_t>(d.id)] != to_point(d.target)) {
      report.violation = SlideViolation{Cause::kNotAtTarget, plan.moves.size(), 0, d.id, -1};
      return report;
    }
  }
  return report;
}

}  // namespace monomap
