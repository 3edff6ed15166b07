#pragma once

#include <vector>

#include "patdual/linear_solve.hpp"
#include "patdual/pgf.hpp"

namespace patdual {

/// Generating-function solution of a race between patterns.
struct DuelSolution {
  /// X_i(z): coefficient of z^n is the probability pattern i wins at trial n.
  std::vector<RationalFunction> x;
  std::vector<Rat> win_probs;
  /// Sum of the X_i.
  Pgf duration{RationalFunction()};
  Moments duration_moments;
};

/// Entry (i, j) is 1 / F_{S_j (overlap) S_i}(z); row index i, column j.
Matrix<RationalFunction> build_duel_matrix(const PatternSet& ps);

/// Solves build_duel_matrix(ps) X = 1. Throws SingularMatrixError with the
/// pattern set in the message when the matrix is singular.
DuelSolution solve_duel(const PatternSet& ps);

SeriesPrefix duration_coefficients(const DuelSolution& sol, std::size_t n);
SeriesPrefix win_prob_series(const DuelSolution& sol, std::size_t i, std::size_t n);

/// Default series length: 4 * ceil(mean), at least 1.
std::size_t default_series_length(const Rat& mean);

}  // namespace patdual
