#include "monomap/reduction.hpp"

#include <algorithm>
#include <map>

#include "monomap/error.hpp"

namespace monomap {

std::string_view to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kBoundary: return "boundary";
    case ColumnKind::kEmpty: return "empty";
    case ColumnKind::kVariable: return "variable";
    case ColumnKind::kClause: return "clause";
  }
  return "unknown";
}

std::pair<Instance, ReductionLayout> build_instance(const CnfFormula& formula) {
  const auto& clauses = formula.clauses();
  const int num_clauses = static_cast<int>(clauses.size());
  ReductionLayout layout;
  layout.formula = formula;

  // Variables in first-occurrence order, with their occurrences split by
  // polarity. Also number each literal's occurrences for labels.
  std::vector<int> var_order;
  std::map<int, std::pair<std::vector<Occurrence>, std::vector<Occurrence>>> by_var;
  std::map<Literal, int> seen;
  std::vector<std::array<int, 3>> ordinal(clauses.size());
  for (int c = 0; c < num_clauses; ++c) {
    for (int p = 0; p < 3; ++p) {
      const Literal lit = clauses[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
      if (!by_var.contains(lit.var)) var_order.push_back(lit.var);
      auto& [pos, neg] = by_var[lit.var];
      (lit.positive ? pos : neg).push_back({c, p, lit});
      ordinal[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] = ++seen[lit];
    }
  }

  // Source order inside a gadget row follows target order: clause column
  // first, then lower rows first.
  auto by_target = [](const Occurrence& a, const Occurrence& b) {
    return a.clause != b.clause ? a.clause < b.clause : a.pos > b.pos;
  };

  std::vector<Robot> robots;
  std::vector<GridPos> obstacles;
  layout.columns.push_back(ColumnKind::kBoundary);
  int col = 1;

  // Clause columns are known up front from the total width, but targets are
  // easier to place after the variable pass; record (robot, occurrence) pairs.
  std::vector<std::pair<int, Occurrence>> pending_targets;
  for (int var : var_order) {
    auto& [pos, neg] = by_var[var];
    std::stable_sort(pos.begin(), pos.end(), by_target);
    std::stable_sort(neg.begin(), neg.end(), by_target);
    layout.empty_columns.push_back(col);
    layout.columns.push_back(ColumnKind::kEmpty);
    ++col;
    VariableGadget gadget;
    gadget.var = var;
    gadget.first_col = col;
    gadget.width = std::max<int>({1, static_cast<int>(pos.size()), static_cast<int>(neg.size())});
    for (int k = 0; k < gadget.width; ++k) {
      obstacles.push_back({col + k, kMiddleRow});
      layout.columns.push_back(ColumnKind::kVariable);
    }
    for (int row : {kTopRow, kBottomRow}) {
      const auto& occs = row == kTopRow ? pos : neg;
      auto& ids = row == kTopRow ? gadget.top_robots : gadget.bottom_robots;
      for (std::size_t k = 0; k < occs.size(); ++k) {
        const Occurrence& occ = occs[k];
        const int id = static_cast<int>(robots.size());
        ids.push_back(id);
        Robot r;
        r.id = id;
        r.label = literal_text(occ.literal, formula.num_vars()) +
                  std::to_string(ordinal[static_cast<std::size_t>(occ.clause)]
                                        [static_cast<std::size_t>(occ.pos)]);
        r.start = {col + static_cast<int>(k), row};
        r.role = RobotRole::kLiteral;
        robots.push_back(r);
        layout.occurrences.push_back(occ);
        pending_targets.emplace_back(id, occ);
      }
    }
    col += gadget.width;
    layout.variables.push_back(std::move(gadget));
  }

  for (int c = 0; c < num_clauses; ++c) {
    layout.empty_columns.push_back(col);
    layout.columns.push_back(ColumnKind::kEmpty);
    layout.columns.push_back(ColumnKind::kClause);
    layout.clauses.push_back({col + 1, {}});
    col += 2;
  }
  layout.columns.push_back(ColumnKind::kBoundary);
  const int width = col + 1;

  for (const auto& [id, occ] : pending_targets) {
    ClauseGadget& gadget = layout.clauses[static_cast<std::size_t>(occ.clause)];
    gadget.robots[static_cast<std::size_t>(occ.pos)] = id;
    robots[static_cast<std::size_t>(id)].target = {gadget.col, occ.pos};
  }

  Robot verifier;
  verifier.id = static_cast<int>(robots.size());
  verifier.label = "r*";
  verifier.start = {0, kMiddleRow};
  verifier.target = {width - 1, kMiddleRow};
  verifier.role = RobotRole::kVerifier;
  layout.verifier = verifier.id;
  robots.push_back(verifier);

  Instance instance(Workspace(width, 3, std::move(obstacles)), std::move(robots));
  return {std::move(instance), std::move(layout)};
}

std::optional<Literal> literal_of_robot(const ReductionLayout& layout, int robot) {
  if (robot == layout.verifier) return std::nullopt;
  if (robot < 0 || robot >= static_cast<int>(layout.occurrences.size())) {
    throw InvalidArgument("unknown robot id " + std::to_string(robot));
  }
  return layout.occurrences[static_cast<std::size_t>(robot)].literal;
}

int robot_of_occurrence(const ReductionLayout& layout, int clause, int pos) {
  if (clause < 0 || clause >= static_cast<int>(layout.clauses.size()) || pos < 0 || pos > 2) {
    throw InvalidArgument("no occurrence at clause " + std::to_string(clause) + " position " +
                          std::to_string(pos));
  }
  return layout.clauses[static_cast<std::size_t>(clause)].robots[static_cast<std::size_t>(pos)];
}

std::optional<std::string> audit_layout(const Instance& instance, const ReductionLayout& layout) {
  const Workspace& ws = instance.workspace();
  const int width = ws.width();
  if (ws.height() != 3) return "workspace must have exactly 3 rows";
  if (static_cast<int>(layout.columns.size()) != width) return "column map does not match width";
  if (width < 2 || layout.columns.front() != ColumnKind::kBoundary ||
      layout.columns.back() != ColumnKind::kBoundary) {
    return "extreme columns must be boundary columns";
  }
  const std::size_t literal_count = layout.occurrences.size();
  if (instance.size() != static_cast<int>(literal_count) + 1 ||
      layout.verifier != static_cast<int>(literal_count)) {
    return "robot count must be one per literal plus the verifier";
  }

  int last_variable_col = -1;
  int first_clause_col = width;
  for (int c = 1; c + 1 < width; ++c) {
    const ColumnKind kind = layout.columns[static_cast<std::size_t>(c)];
    const ColumnKind prev = layout.columns[static_cast<std::size_t>(c - 1)];
    const bool gadget_start =
        kind == ColumnKind::kClause || (kind == ColumnKind::kVariable && prev != ColumnKind::kVariable);
    if (gadget_start && prev != ColumnKind::kEmpty) {
      return "gadget at column " + std::to_string(c) + " lacks an empty column to its left";
    }
    if (kind == ColumnKind::kBoundary) return "boundary column inside the workspace";
    if (kind == ColumnKind::kVariable) last_variable_col = c;
    if (kind == ColumnKind::kClause) first_clause_col = std::min(first_clause_col, c);
  }
  if (last_variable_col > first_clause_col) {
    return "assignment gadgets must lie left of clause gadgets";
  }

  std::vector<GridPos> expected_obstacles;
  for (int c = 0; c < width; ++c) {
    if (layout.columns[static_cast<std::size_t>(c)] == ColumnKind::kVariable) {
      expected_obstacles.push_back({c, kMiddleRow});
    }
  }
  std::sort(expected_obstacles.begin(), expected_obstacles.end());
  if (expected_obstacles != ws.obstacles()) {
    return "obstacles must be exactly the middle rows of assignment gadgets";
  }

  const Robot& verifier = instance.robot(layout.verifier);
  if (verifier.role != RobotRole::kVerifier || verifier.start.col != 0 ||
      verifier.target.col != width - 1) {
    return "verifier must travel between the extreme columns";
  }

  for (const VariableGadget& g : layout.variables) {
    for (int row : {kTopRow, kBottomRow}) {
      const auto& ids = row == kTopRow ? g.top_robots : g.bottom_robots;
      int prev_target_col = -1;
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const Robot& r = instance.robot(ids[k]);
        const Occurrence& occ = layout.occurrences[static_cast<std::size_t>(r.id)];
        if (r.start != GridPos{g.first_col + static_cast<int>(k), row}) {
          return "robot " + r.label + " source is not packed in its gadget row";
        }
        if (occ.literal.var != g.var || occ.literal.positive != (row == kTopRow)) {
          return "robot " + r.label + " sits in the wrong gadget row";
        }
        if (r.target.col < prev_target_col) {
          return "intra-literal order broken at robot " + r.label;
        }
        prev_target_col = r.target.col;
      }
    }
  }
  for (std::size_t c = 0; c < layout.clauses.size(); ++c) {
    const ClauseGadget& g = layout.clauses[c];
    if (layout.columns[static_cast<std::size_t>(g.col)] != ColumnKind::kClause) {
      return "clause gadget not on a clause column";
    }
    for (int p = 0; p < 3; ++p) {
      const Robot& r = instance.robot(g.robots[static_cast<std::size_t>(p)]);
      if (r.target != GridPos{g.col, p}) return "robot " + r.label + " target misplaced";
      const Occurrence& occ = layout.occurrences[static_cast<std::size_t>(r.id)];
      if (occ.clause != static_cast<int>(c) || occ.pos != p ||
          occ.literal != layout.formula.clauses()[c][static_cast<std::size_t>(p)]) {
        return "occurrence map disagrees with formula at clause " + std::to_string(c);
      }
    }
  }
  for (int c : layout.empty_columns) {
    if (layout.columns[static_cast<std::size_t>(c)] != ColumnKind::kEmpty) {
      return "listed empty column " + std::to_string(c) + " is not empty";
    }
  }
  for (const Robot& r : instance.robots()) {
    for (GridPos p : {r.start, r.target}) {
      if (layout.columns[static_cast<std::size_t>(p.col)] == ColumnKind::kEmpty) {
        return "robot " + r.label + " has an endpoint in an empty column";
      }
    }
  }
  return std::nullopt;
}

}  // namespace monomap
