#pragma once

// Fixtures, generators and independent oracles shared by the test suites.
// The oracles here deliberately avoid the library's search code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "monomap/grid.hpp"
#include "monomap/sat.hpp"

namespace monomap::testing {

// (¬a ∨ ¬b ∨ c) ∧ (a ∨ ¬b ∨ c) ∧ (a ∨ b ∨ ¬c)
inline CnfFormula fig1_formula() {
  return CnfFormula(3, {{{{1, false}, {2, false}, {3, true}}},
                        {{{1, true}, {2, false}, {3, true}}},
                        {{{1, true}, {2, true}, {3, false}}}});
}

// All eight polarity patterns over a, b, c.
inline CnfFormula complete_formula() {
  std::vector<Clause> clauses;
  for (int m = 0; m < 8; ++m) {
    clauses.push_back({{{1, (m & 1) == 0}, {2, (m & 2) == 0}, {3, (m & 4) == 0}}});
  }
  return CnfFormula(3, std::move(clauses));
}

inline CnfFormula random_formula(std::mt19937& rng, int max_vars, int max_clauses) {
  const int vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int count = std::uniform_int_distribution<int>(0, max_clauses)(rng);
  std::uniform_int_distribution<int> var(1, vars);
  std::bernoulli_distribution sign(0.5);
  std::vector<Clause> clauses;
  for (int c = 0; c < count; ++c) {
    Clause clause;
    for (Literal& lit : clause) lit = {var(rng), sign(rng)};
    clauses.push_back(clause);
  }
  return CnfFormula(vars, std::move(clauses));
}

// Every assignment, checked literal by literal.
inline bool exhaustively_satisfiable(const CnfFormula& f) {
  const int n = f.num_vars();
  for (unsigned bits = 0; bits < (1U << n); ++bits) {
    bool all = true;
    for (const Clause& clause : f.clauses()) {
      bool any = false;
      for (const Literal& lit : clause) {
        const bool value = (bits >> (lit.var - 1)) & 1U;
        any = any || value == lit.positive;
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

// Formulas over at most three variables with at most three distinct
// clauses, one representative per class under variable renaming and
// polarity flips. Clauses are sorted literal multisets.
inline std::vector<CnfFormula> canonical_small_formulas() {
  using Code = std::array<int, 3>;  // literals as 2*(var-1) + (negative ? 1 : 0)
  std::vector<Code> clauses;
  for (int x = 0; x < 6; ++x) {
    for (int y = x; y < 6; ++y) {
      for (int z = y; z < 6; ++z) clauses.push_back({x, y, z});
    }
  }
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

  auto canonical = [&](std::vector<Code> formula) {
    std::vector<Code> best;
    for (const auto& perm : perms) {
      for (int flips = 0; flips < 8; ++flips) {
        std::vector<Code> image;
        for (const Code& c : formula) {
          Code mapped;
          for (int i = 0; i < 3; ++i) {
            const int var = c[static_cast<std::size_t>(i)] / 2;
            const int neg = c[static_cast<std::size_t>(i)] % 2;
            const int nv = perm[static_cast<std::size_t>(var)];
            mapped[static_cast<std::size_t>(i)] = 2 * nv + (neg ^ ((flips >> nv) & 1));
          }
          std::sort(mapped.begin(), mapped.end());
          image.push_back(mapped);
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
      }
    }
    return best;
  };

  std::set<std::vector<Code>> seen;
  std::vector<CnfFormula> out;
  auto consider = [&](std::vector<Code> formula) {
    auto key = canonical(formula);
    if (!seen.insert(key).second) return;
    std::vector<Clause> cnf;
    for (const Code& c : key) {
      Clause clause;
      for (int i = 0; i < 3; ++i) {
        clause[static_cast<std::size_t>(i)] = {c[static_cast<std::size_t>(i)] / 2 + 1,
                                               c[static_cast<std::size_t>(i)] % 2 == 0};
      }
      cnf.push_back(clause);
    }
    out.emplace_back(3, std::move(cnf));
  };
  const std::size_t k = clauses.size();
  consider({});
  for (std::size_t i = 0; i < k; ++i) {
    consider({clauses[i]});
    for (std::size_t j = i + 1; j < k; ++j) {
      consider({clauses[i], clauses[j]});
      for (std::size_t l = j + 1; l < k; ++l) consider({clauses[i], clauses[j], clauses[l]});
    }
  }
  return out;
}

// Random small instance: up to max_side x max_side grid, up to max_robots
// robots with distinct starts and distinct targets on free cells.
inline Instance random_instance(std::mt19937& rng, int max_side, int max_robots) {
  std::uniform_int_distribution<int> side(1, max_side);
  while (true) {
    const int w = side(rng);
    const int h = side(rng);
    std::bernoulli_distribution wall(0.2);
    std::vector<GridPos> obstacles;
    std::vector<GridPos> free;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) (wall(rng) ? obstacles : free).push_back({c, r});
    }
    if (free.empty()) continue;
    const int n = std::uniform_int_distribution<int>(
        1, std::min<int>(max_robots, static_cast<int>(free.size())))(rng);
    auto starts = free;
    auto targets = free;
    std::shuffle(starts.begin(), starts.end(), rng);
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<Robot> robots;
    for (int i = 0; i < n; ++i) {
      robots.push_back({i, "r" + std::to_string(i), starts[static_cast<std::size_t>(i)],
                        targets[static_cast<std::size_t>(i)], RobotRole::kLiteral});
    }
    return Instance(Workspace(w, h, obstacles), std::move(robots));
  }
}

// Tries all n! orders, checking each robot's turn with shortest_path.
inline bool naive_monotone_feasible(const Instance& instance) {
  std::vector<int> order(static_cast<std::size_t>(instance.size()));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<bool> moved(order.size(), false);
    bool ok = true;
    for (int id : order) {
      const Robot& r = instance.robot(id);
      std::vector<GridPos> occupied;
      for (const Robot& q : instance.robots()) {
        if (q.id != id) occupied.push_back(moved[static_cast<std::size_t>(q.id)] ? q.target : q.start);
      }
      if (std::find(occupied.begin(), occupied.end(), r.target) != occupied.end() ||
          !shortest_path(instance.workspace(), r.start, r.target, occupied)) {
        ok = false;
        break;
      }
      moved[static_cast<std::size_t>(id)] = true;
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Length (in cells) of the shortest simple path, by enumerating all simple
// paths depth-first. nullopt when none exists.
inline std::optional<std::size_t> brute_force_path_length(const Workspace& ws, GridPos from,
                                                          GridPos to,
                                                          const std::set<GridPos>& occupied) {
  std::optional<std::size_t> best;
  std::set<GridPos> on_path{from};
  std::function<void(GridPos, std::size_t)> dfs = [&](GridPos at, std::size_t len) {
    if (at == to) {
      if (!best || len < *best) best = len;
      return;
    }
    for (GridPos d : {GridPos{1, 0}, GridPos{-1, 0}, GridPos{0, 1}, GridPos{0, -1}}) {
      const GridPos next{at.col + d.col, at.row + d.row};
      if (!ws.is_free(next) || occupied.contains(next) || on_path.contains(next)) continue;
      on_path.insert(next);
      dfs(next, len + 1);
      on_path.erase(next);
    }
  };
  dfs(from, 1);
  return best;
}

}  // namespace monomap::testing
