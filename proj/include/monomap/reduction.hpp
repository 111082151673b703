#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomap/grid.hpp"
#include "monomap/sat.hpp"

namespace monomap {

inline constexpr int kTopRow = 0;
inline constexpr int kMiddleRow = 1;
inline constexpr int kBottomRow = 2;

// Block of columns holding the starts of one variable's literal robots:
// positive occurrences on the top row, negative ones on the bottom row,
// obstacles in between.
struct VariableGadget {
  int var = 1;
  int first_col = 0;
  int width = 1;
  std::vector<int> top_robots;     // left to right, at (first_col + k, kTopRow)
  std::vector<int> bottom_robots;  // left to right, at (first_col + k, kBottomRow)

  friend bool operator==(const VariableGadget&, const VariableGadget&) = default;
};

// One column holding the targets of a clause's literals, top to bottom in
// written order.
struct ClauseGadget {
  int col = 0;
  std::array<int, 3> robots{};

  friend bool operator==(const ClauseGadget&, const ClauseGadget&) = default;
};

struct Occurrence {
  int clause = 0;
  int pos = 0;
  Literal literal;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

enum class ColumnKind { kBoundary, kEmpty, kVariable, kClause };

// Bookkeeping tying the formula to the generated instance.
struct ReductionLayout {
  CnfFormula formula;
  std::vector<VariableGadget> variables;  // left to right
  std::vector<ClauseGadget> clauses;      // clause order == left to right
  std::vector<Occurrence> occurrences;    // indexed by literal robot id
  int verifier = 0;
  std::vector<int> empty_columns;
  std::vector<ColumnKind> columns;

  friend bool operator==(const ReductionLayout&, const ReductionLayout&) = default;
};

// Builds the three-row instance for `formula`: a verifier that has to
// cross from the leftmost to the rightmost column, one literal robot per
// literal occurrence travelling from its variable gadget to its clause
// gadget. Fully deterministic.
std::pair<Instance, ReductionLayout> build_instance(const CnfFormula& formula);

// nullopt for the verifier. Throws InvalidArgument for unknown ids.
std::optional<Literal> literal_of_robot(const ReductionLayout& layout, int robot);
// Throws InvalidArgument for out-of-range clause index or position.
int robot_of_occurrence(const ReductionLayout& layout, int clause, int pos);

// Checks the structural properties every reduction instance has (three
// rows, gadget placement, empty separator columns, obstacle placement,
// intra-literal source order). Returns a description of the first problem
// found, or nullopt.
std::optional<std::string> audit_layout(const Instance& instance, const ReductionLayout& layout);

std::string_view to_string(ColumnKind kind);

}  // namespace monomap
