#include "monomap/planning.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "monomap/error.hpp"

namespace monomap {

namespace {

void walk_vertically(Path& path, int col, int to_row) {
  int row = path.back().row;
  while (row != to_row) {
    row += to_row > row ? 1 : -1;
    path.push_back({col, row});
  }
}

// The verifier route: crosses every variable gadget on its false row and
// every clause gadget on the chosen row, switching rows only in empty and
// boundary columns.
Path verifier_route(const std::vector<int>& column_row, int width) {
  Path path{{0, kMiddleRow}};
  for (int c = 1; c < width; ++c) {
    const int wanted = column_row[static_cast<std::size_t>(c)];
    if (wanted >= 0) walk_vertically(path, c - 1, wanted);
    path.push_back({c, path.back().row});
  }
  walk_vertically(path, width - 1, kMiddleRow);
  return path;
}

}  // namespace

std::pair<MonotonePlan, SynthesisTrace> synthesize_plan(const Instance& instance,
                                                        const ReductionLayout& layout,
                                                        const Assignment& assignment) {
  const CnfFormula& formula = layout.formula;
  if (assignment.values.size() != static_cast<std::size_t>(formula.num_vars())) {
    throw InvalidArgument("assignment size does not match the formula");
  }
  const int width = instance.workspace().width();
  SynthesisTrace trace;

  // Row the verifier must use in each constrained column, -1 when free.
  std::vector<int> column_row(static_cast<std::size_t>(width), -1);
  for (const VariableGadget& g : layout.variables) {
    const int false_row = assignment.value(g.var) ? kBottomRow : kTopRow;
    for (int k = 0; k < g.width; ++k) column_row[static_cast<std::size_t>(g.first_col + k)] = false_row;
  }
  for (std::size_t c = 0; c < layout.clauses.size(); ++c) {
    const Clause& clause = formula.clauses()[c];
    int row = -1;
    for (int p = 0; p < 3 && row < 0; ++p) {
      if (assignment.satisfies(clause[static_cast<std::size_t>(p)])) row = p;
    }
    if (row < 0) {
      throw InvalidArgument("assignment does not satisfy clause " + std::to_string(c));
    }
    column_row[static_cast<std::size_t>(layout.clauses[c].col)] = row;
    trace.chosen_clause_targets.push_back({layout.clauses[c].col, row});
  }
  trace.verifier_path = verifier_route(column_row, width);
  const Path& route = trace.verifier_path;

  // The route is x-monotone, so each column occupies a contiguous index range.
  std::vector<std::size_t> first_index(static_cast<std::size_t>(width), route.size());
  std::vector<std::size_t> last_index(static_cast<std::size_t>(width), 0);
  for (std::size_t i = 0; i < route.size(); ++i) {
    const auto c = static_cast<std::size_t>(route[i].col);
    first_index[c] = std::min(first_index[c], i);
    last_index[c] = i;
  }

  // Follows the route from index `from` to the empty column left of the
  // target's clause gadget, then steps into the target.
  auto finish_along_route = [&](Path& path, std::size_t from, GridPos target) {
    const std::size_t stop = first_index[static_cast<std::size_t>(target.col - 1)];
    for (std::size_t i = from + 1; i <= stop; ++i) path.push_back(route[i]);
    walk_vertically(path, target.col - 1, target.row);
    path.push_back(target);
  };

  for (int id = 0; id < static_cast<int>(layout.occurrences.size()); ++id) {
    const bool truth = assignment.satisfies(layout.occurrences[static_cast<std::size_t>(id)].literal);
    (truth ? trace.true_set : trace.false_set).push_back(id);
  }
  auto false_order = trace.false_set;
  std::sort(false_order.begin(), false_order.end(), [&](int a, int b) {
    return instance.robot(a).start.col > instance.robot(b).start.col;
  });
  auto true_order = trace.true_set;
  std::sort(true_order.begin(), true_order.end(), [&](int a, int b) {
    const GridPos ta = instance.robot(a).target;
    const GridPos tb = instance.robot(b).target;
    return ta.col != tb.col ? ta.col > tb.col : ta.row < tb.row;
  });

  std::vector<int> gadget_end(static_cast<std::size_t>(formula.num_vars() + 1), 0);
  for (const VariableGadget& g : layout.variables) {
    gadget_end[static_cast<std::size_t>(g.var)] = g.first_col + g.width;
  }

  MonotonePlan plan;
  for (int id : false_order) {
    const Robot& r = instance.robot(id);
    const auto at = std::find(route.begin(), route.end(), r.start);
    if (at == route.end()) {
      throw std::logic_error("false-literal source " + r.label + " is off the verifier route");
    }
    Path path{r.start};
    finish_along_route(path, static_cast<std::size_t>(at - route.begin()), r.target);
    plan.moves.push_back({id, std::move(path)});
  }
  plan.moves.push_back({layout.verifier, route});
  for (int id : true_order) {
    const Robot& r = instance.robot(id);
    const Literal lit = layout.occurrences[static_cast<std::size_t>(id)].literal;
    const int exit_col = gadget_end[static_cast<std::size_t>(lit.var)];
    Path path{r.start};
    for (int c = r.start.col + 1; c <= exit_col; ++c) path.push_back({c, r.start.row});
    if (exit_col == r.target.col - 1) {
      walk_vertically(path, exit_col, r.target.row);
      path.push_back(r.target);
    } else {
      const std::size_t join = last_index[static_cast<std::size_t>(exit_col)];
      walk_vertically(path, exit_col, route[join].row);
      finish_along_route(path, join, r.target);
    }
    plan.moves.push_back({id, std::move(path)});
  }
  return {std::move(plan), std::move(trace)};
}

Assignment extract_assignment(const Instance& instance, const ReductionLayout& layout,
                              const MonotonePlan& plan) {
  if (auto violation = validate_monotone_plan(instance, plan)) {
    throw InvalidArgument("plan does not validate: " + to_string(*violation));
  }
  const int n = layout.formula.num_vars();
  Assignment a{std::vector<bool>(static_cast<std::size_t>(n), false)};
  std::vector<int> forced(static_cast<std::size_t>(n + 1), 0);  // +1 true, -1 false
  bool after_verifier = false;
  for (const Move& move : plan.moves) {
    if (move.robot == layout.verifier) {
      after_verifier = true;
      continue;
    }
    if (!after_verifier) continue;
    const Literal lit = *literal_of_robot(layout, move.robot);
    const int want = lit.positive ? 1 : -1;
    int& slot = forced[static_cast<std::size_t>(lit.var)];
    if (slot == -want) {
      throw InconsistencyError("both polarities of " + variable_name(lit.var, n) +
                               " move after the verifier");
    }
    slot = want;
    a.values[static_cast<std::size_t>(lit.var - 1)] = lit.positive;
  }
  return a;
}

std::optional<MonotonePlan> plan_for_order(const Instance& instance, const std::vector<int>& order) {
  const Workspace& ws = instance.workspace();
  std::vector<bool> moved(static_cast<std::size_t>(instance.size()), false);
  MonotonePlan plan;
  for (int id : order) {
    const Robot& r = instance.robot(id);
    CellMask occupied(ws);
    for (const Robot& q : instance.robots()) {
      if (q.id == id) continue;
      occupied.set(moved[static_cast<std::size_t>(q.id)] ? q.target : q.start);
    }
    if (occupied.test(r.start) || occupied.test(r.target)) return std::nullopt;
    auto path = shortest_path(ws, r.start, r.target, occupied);
    if (!path) return std::nullopt;
    plan.moves.push_back({id, std::move(*path)});
    moved[static_cast<std::size_t>(id)] = true;
  }
  return plan;
}

namespace {

using Mask = std::uint64_t;

// Ordering facts inferred for the unmoved robots of one search state.
// before[r]: robots that have to move before r. after[r]: robots that have
// to move after r.
struct Precedence {
  std::vector<Mask> before;
  std::vector<Mask> after;
};

class StateAnalyzer {
 public:
  explicit StateAnalyzer(const Instance& instance)
      : instance_(instance), ws_(instance.workspace()), n_(instance.size()) {}

  // Returns false when no completion from `moved` can exist. Otherwise
  // fills `prec` with inferred orderings among unmoved robots.
  //
  // At robot r's turn every other unmoved robot q sits either at its start
  // (q moves after r) or at its target (q moved before r), and every moved
  // robot sits at its target. If r has no route once t_q is blocked too,
  // q must come after r; if r has no route once s_q is blocked, q must come
  // before r. Facts are closed transitively and fed back into the blocked
  // sets until nothing changes. A robot needed both before and after
  // another, or with no route at all, means the state is dead.
  bool analyze(Mask moved, Precedence& prec) {
    const Mask unmoved = full() & ~moved;
    prec.before.assign(static_cast<std::size_t>(n_), 0);
    prec.after.assign(static_cast<std::size_t>(n_), 0);
    CellMask base(ws_);
    for (int q = 0; q < n_; ++q) {
      if (moved >> q & 1U) base.set(robot(q).target);
    }
    for (int r = 0; r < n_; ++r) {
      if ((unmoved >> r & 1U) && (base.test(robot(r).start) || base.test(robot(r).target))) {
        return false;
      }
    }

    bool changed = true;
    while (changed) {
      changed = false;
      for (int r = 0; r < n_; ++r) {
        if (!(unmoved >> r & 1U)) continue;
        CellMask blocked = blocked_at_turn(r, base, prec);
        if (blocked.test(robot(r).start) || blocked.test(robot(r).target)) return false;
        auto path = shortest_path(ws_, robot(r).start, robot(r).target, blocked);
        if (!path) return false;
        CellMask on_path(ws_);
        for (GridPos p : *path) on_path.set(p);
        const Mask known = prec.before[static_cast<std::size_t>(r)] |
                           prec.after[static_cast<std::size_t>(r)];
        for (int q = 0; q < n_; ++q) {
          if (q == r || !(unmoved >> q & 1U) || (known >> q & 1U)) continue;
          const Robot& other = robot(q);
          // Cells off the current path cannot cut it; skipping them only
          // weakens the inference.
          if (on_path.test(other.target) && !route_with(r, blocked, other.target)) {
            if (!order(prec, r, q, unmoved)) return false;
            changed = true;
            blocked = blocked_at_turn(r, base, prec);
          }
          if (on_path.test(other.start) && !route_with(r, blocked, other.start)) {
            if (!order(prec, q, r, unmoved)) return false;
            changed = true;
            blocked = blocked_at_turn(r, base, prec);
          }
        }
      }
    }
    return true;
  }

 private:
  const Robot& robot(int id) const { return instance_.robots()[static_cast<std::size_t>(id)]; }
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  CellMask blocked_at_turn(int r, const CellMask& base, const Precedence& prec) const {
    CellMask blocked = base;
    const Mask before = prec.before[static_cast<std::size_t>(r)];
    const Mask after = prec.after[static_cast<std::size_t>(r)];
    for (int q = 0; q < n_; ++q) {
      if (before >> q & 1U) blocked.set(robot(q).target);
      if (after >> q & 1U) blocked.set(robot(q).start);
    }
    return blocked;
  }

  bool route_with(int r, CellMask blocked, GridPos extra) const {
    if (blocked.test(robot(r).start) || blocked.test(robot(r).target) || extra == robot(r).start ||
        extra == robot(r).target) {
      return false;
    }
    blocked.set(extra);
    return reachable(ws_, robot(r).start, robot(r).target, blocked);
  }

  // Records first -> second with transitive closure. False on a cycle.
  bool order(Precedence& prec, int first, int second, Mask unmoved) const {
    const auto f = static_cast<std::size_t>(first);
    const auto s = static_cast<std::size_t>(second);
    const Mask preds = prec.before[f] | Mask{1} << first;
    const Mask succs = prec.after[s] | Mask{1} << second;
    if (preds & succs) return false;
    for (int x = 0; x < n_; ++x) {
      if (!(unmoved >> x & 1U)) continue;
      if (preds >> x & 1U) prec.after[static_cast<std::size_t>(x)] |= succs;
      if (succs >> x & 1U) prec.before[static_cast<std::size_t>(x)] |= preds;
    }
    for (int x = 0; x < n_; ++x) {
      if (prec.before[static_cast<std::size_t>(x)] & prec.after[static_cast<std::size_t>(x)]) {
        return false;
      }
    }
    return true;
  }

  const Instance& instance_;
  const Workspace& ws_;
  int n_;
};

}  // namespace

std::optional<MonotonePlan> solve_monotone(const Instance& instance, const SolverOptions& options,
                                           SolverStats* stats) {
  const int n = instance.size();
  const int cap = std::min(options.max_robots, kMaxSolverCap);
  if (n > cap) {
    throw CapacityError("instance has " + std::to_string(n) + " robots, solver cap is " +
                        std::to_string(cap));
  }
  const Workspace& ws = instance.workspace();
  const auto& robots = instance.robots();
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  SolverStats local;
  std::unordered_set<Mask> dead;
  std::vector<int> order;
  StateAnalyzer analyzer(instance);

  std::function<bool(Mask)> search = [&](Mask moved) -> bool {
    if (moved == full) return true;
    if (dead.contains(moved)) return false;
    ++local.states_visited;

    Precedence prec;
    if (!analyzer.analyze(moved, prec)) {
      dead.insert(moved);
      return false;
    }
    for (int r = 0; r < n; ++r) {
      if ((moved >> r & 1U) || prec.before[static_cast<std::size_t>(r)] != 0) continue;
      const Robot& robot = robots[static_cast<std::size_t>(r)];
      CellMask occupied(ws);
      bool target_taken = false;
      for (int q = 0; q < n; ++q) {
        if (q == r) continue;
        const Robot& other = robots[static_cast<std::size_t>(q)];
        const GridPos at = (moved >> q & 1U) ? other.target : other.start;
        occupied.set(at);
        target_taken = target_taken || at == robot.target;
      }
      if (target_taken || !reachable(ws, robot.start, robot.target, occupied)) continue;
      order.push_back(r);
      if (search(moved | Mask{1} << r)) return true;
      order.pop_back();
    }
    dead.insert(moved);
    return false;
  };

  const bool feasible = search(0);
  local.dead_states = dead.size();
  if (stats) *stats = local;
  if (!feasible) return std::nullopt;
  auto plan = plan_for_order(instance, order);
  if (!plan) throw std::logic_error("solver order failed to materialize");
  return plan;
}

}  // namespace monomap
