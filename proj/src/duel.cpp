#include "patdual/duel.hpp"

#include <gmpxx.h>

#include "patdual/errors.hpp"

namespace patdual {

Matrix<RationalFunction> build_duel_matrix(const PatternSet& ps) {
  const std::size_t m = ps.size();
  Matrix<RationalFunction> f(m, std::vector<RationalFunction>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const SymbolString head = overlap_string(ps[j], ps[i]);
      f[i][j] = first_passage_gf(head, ps.alphabet()).reciprocal();
    }
  }
  return f;
}

DuelSolution solve_duel(const PatternSet& ps) {
  const std::size_t m = ps.size();
  DuelSolution sol;
  try {
    sol.x = solve_linear_system(build_duel_matrix(ps), std::vector<RationalFunction>(m, RationalFunction(Rat(1))));
  } catch (const SingularMatrixError& e) {
    std::string names;
    for (const auto& p : ps.patterns()) names += (names.empty() ? "" : ", ") + p.str();
    throw SingularMatrixError(e.column(), std::string(e.what()) + " (duel matrix of {" + names + "})");
  }
  RationalFunction total;
  for (const auto& xi : sol.x) {
    sol.win_probs.push_back(xi.limit_at_one());
    total += xi;
  }
  sol.duration = Pgf(std::move(total));
  sol.duration_moments = sol.duration.moments();
  return sol;
}

SeriesPrefix duration_coefficients(const DuelSolution& sol, std::size_t n) { return sol.duration.coefficients(n); }

SeriesPrefix win_prob_series(const DuelSolution& sol, std::size_t i, std::size_t n) {
  if (i >= sol.x.size()) throw PreconditionError("win_prob_series: pattern index out of range");
  return sol.x[i].series(n);
}

std::size_t default_series_length(const Rat& mean) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), mean.mpq().get_num_mpz_t(), mean.mpq().get_den_mpz_t());
  if (c < 1) c = 1;
  return static_cast<std::size_t>(4 * c.get_ui());
}

}  // namespace patdual
