#include "monomap/sat.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "monomap/error.hpp"

namespace monomap {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw InvalidArgument("negative variable count");
  for (const Clause& clause : clauses_) {
    for (const Literal& lit : clause) {
      if (lit.var < 1 || lit.var > num_vars_) {
        throw InvalidArgument("literal variable " + std::to_string(lit.var) + " out of range");
      }
    }
  }
}

namespace {

using Kind = ParseError::Kind;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long> to_long(std::string_view token) {
  long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<long> num_vars;
  long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  int pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front() == "c" || tokens.front().front() == 'c') continue;
    if (tokens.front() == "%") break;  // SATLIB trailer
    if (tokens.front() == "p") {
      if (num_vars) throw ParseError(Kind::kMalformedHeader, line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ParseError(Kind::kMalformedHeader, line_no, "expected 'p cnf <vars> <clauses>'");
      }
      const auto v = to_long(tokens[2]);
      const auto c = to_long(tokens[3]);
      if (!v || !c || *v < 0 || *c < 0) {
        throw ParseError(Kind::kMalformedHeader, line_no, "bad header counts");
      }
      num_vars = *v;
      declared_clauses = *c;
      continue;
    }
    if (!num_vars) {
      throw ParseError(Kind::kMalformedHeader, line_no, "clause before 'p cnf' header");
    }
    for (std::string_view token : tokens) {
      const auto value = to_long(token);
      if (!value) {
        throw ParseError(Kind::kNonInteger, line_no,
                         "non-integer token '" + std::string(token) + "'");
      }
      if (*value == 0) {
        if (pending.size() != 3) {
          throw ParseError(Kind::kClauseArity, line_no,
                           "clause has " + std::to_string(pending.size()) +
                               " literals, expected 3");
        }
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long var = *value < 0 ? -*value : *value;
      if (var > *num_vars) {
        throw ParseError(Kind::kVariableOutOfRange, line_no,
                         "variable " + std::to_string(var) + " exceeds declared " +
                             std::to_string(*num_vars));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back({static_cast<int>(var), *value > 0});
    }
  }
  if (!num_vars) throw ParseError(Kind::kMalformedHeader, line_no, "missing 'p cnf' header");
  if (!pending.empty()) {
    throw ParseError(Kind::kClauseArity, pending_line, "unterminated clause");
  }
  if (static_cast<long>(clauses.size()) != declared_clauses) {
    throw ParseError(Kind::kClauseCountMismatch, line_no,
                     "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<int>(*num_vars), std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "c monomap\n";
  out << "p cnf " << formula.num_vars() << ' ' << formula.clauses().size() << '\n';
  for (const Clause& clause : formula.clauses()) {
    for (const Literal& lit : clause) out << (lit.positive ? lit.var : -lit.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.values.size() != static_cast<std::size_t>(formula.num_vars())) {
    throw InvalidArgument("assignment covers " + std::to_string(assignment.values.size()) +
                          " variables, formula has " + std::to_string(formula.num_vars()));
  }
  for (const Clause& clause : formula.clauses()) {
    bool sat = false;
    for (const Literal& lit : clause) sat = sat || assignment.satisfies(lit);
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& formula) {
  const int n = formula.num_vars();
  if (n > kBruteForceVarLimit) {
    throw CapacityError("brute force limited to " + std::to_string(kBruteForceVarLimit) +
                        " variables, formula has " + std::to_string(n));
  }
  // Bit (n - var) of `bits` holds variable var, so counting upward walks
  // assignments in lexicographic order.
  const std::uint64_t total = std::uint64_t{1} << n;
  Assignment a{std::vector<bool>(static_cast<std::size_t>(n), false)};
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int v = 1; v <= n; ++v) a.values[static_cast<std::size_t>(v - 1)] = (bits >> (n - v)) & 1U;
    if (evaluate(formula, a)) return a;
  }
  return std::nullopt;
}

std::string variable_name(int var, int num_vars) {
  if (num_vars <= 26 && var >= 1 && var <= 26) return std::string(1, static_cast<char>('a' + var - 1));
  return "x" + std::to_string(var);
}

std::string literal_text(Literal lit, int num_vars) {
  return (lit.positive ? "" : "¬") + variable_name(lit.var, num_vars);
}

std::string format_assignment(const Assignment& assignment) {
  const int n = static_cast<int>(assignment.values.size());
  std::string out;
  for (int v = 1; v <= n; ++v) {
    if (v > 1) out += ',';
    out += variable_name(v, n) + "=" + (assignment.value(v) ? "T" : "F");
  }
  return out;
}

Assignment parse_assignment(std::string_view text, int num_vars) {
  Assignment a{std::vector<bool>(static_cast<std::size_t>(num_vars), false)};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view entry = text.substr(pos, end - pos);
    pos = end + 1;
    while (!entry.empty() && std::isspace(static_cast<unsigned char>(entry.front()))) entry.remove_prefix(1);
    while (!entry.empty() && std::isspace(static_cast<unsigned char>(entry.back()))) entry.remove_suffix(1);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("assignment entry '" + std::string(entry) + "' lacks '='");
    }
    const std::string_view name = entry.substr(0, eq);
    const std::string_view value = entry.substr(eq + 1);
    int var = 0;
    for (int v = 1; v <= num_vars && var == 0; ++v) {
      if (name == variable_name(v, num_vars) || name == "x" + std::to_string(v) ||
          name == std::to_string(v)) {
        var = v;
      }
    }
    if (var == 0) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
    bool truth = false;
    if (value == "T" || value == "1" || value == "true") {
      truth = true;
    } else if (value == "F" || value == "0" || value == "false") {
      truth = false;
    } else {
      throw InvalidArgument("bad truth value '" + std::string(value) + "'");
    }
    a.values[static_cast<std::size_t>(var - 1)] = truth;
  }
  return a;
}

}  // namespace monomap
