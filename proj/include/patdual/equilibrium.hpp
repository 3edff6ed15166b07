#pragma once

#include <vector>

#include "patdual/linear_solve.hpp"
#include "patdual/patterns.hpp"

namespace patdual {

/// Stationary per-trial win rates y_i of endlessly repeated play.
struct EquilibriumSolution {
  std::vector<Rat> y;
  std::vector<Rat> win_probs;  // y_j / sum(y)
  Rat expected_duration;       // 1 / sum(y)
};

struct EquilibriumSystem {
  Matrix<Rat> a;
  std::vector<Rat> rhs;
};

/// Row j: P(S_j) = sum_i y_i * sum_{l in S_i (.) S_j} P(S_j[l+1..k]).
EquilibriumSystem build_equilibrium_system(const PatternSet& ps);

EquilibriumSolution solve_equilibrium(const PatternSet& ps);

}  // namespace patdual
