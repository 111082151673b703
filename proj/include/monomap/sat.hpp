#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monomap {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// A 3-CNF formula. Clauses may repeat literals or contain a literal and its
// complement.
class CnfFormula {
 public:
  CnfFormula() = default;
  // Throws InvalidArgument if a literal references a variable outside
  // [1, num_vars].
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Truth value per variable; index 0 is variable 1.
struct Assignment {
  std::vector<bool> values;

  bool value(int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
  bool satisfies(Literal lit) const { return value(lit.var) == lit.positive; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// DIMACS CNF reader. Every clause must have exactly three literals.
// Throws ParseError with the offending line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

// Writes a `c` comment line, the `p cnf` header and one clause per line.
std::string serialize_dimacs(const CnfFormula& formula);

// Throws InvalidArgument when the assignment does not cover every variable.
bool evaluate(const CnfFormula& formula, const Assignment& assignment);

inline constexpr int kBruteForceVarLimit = 30;

// Lexicographically first satisfying assignment (variable 1 most
// significant, false before true), or nullopt when unsatisfiable. Throws
// CapacityError above kBruteForceVarLimit variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& formula);

// Display name of a variable: a..z when the formula has at most 26
// variables, x<k> otherwise.
std::string variable_name(int var, int num_vars);
// "a", "¬b", ...
std::string literal_text(Literal lit, int num_vars);

// "a=T,b=F,c=T" using variable_name().
std::string format_assignment(const Assignment& assignment);
// Accepts the format above as well as numeric names ("1=T", "x1=T") and
// T/F, 1/0, true/false. Unlisted variables are false. Throws
// InvalidArgument on unknown names or malformed entries.
Assignment parse_assignment(std::string_view text, int num_vars);

}  // namespace monomap
