#include "patdual/equilibrium.hpp"

#include "patdual/errors.hpp"

namespace patdual {

EquilibriumSystem build_equilibrium_system(const PatternSet& ps) {
  const std::size_t m = ps.size();
  EquilibriumSystem sys;
  sys.a.assign(m, std::vector<Rat>(m));
  sys.rhs.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::span<const int> sj = ps[j].symbols();
    sys.rhs[j] = string_probability(sj, ps.alphabet());
    for (std::size_t i = 0; i < m; ++i) {
      Rat entry;
      for (std::size_t l : correlation_set(ps[i].symbols(), sj)) entry += string_probability(sj.subspan(l), ps.alphabet());
      sys.a[j][i] = entry;
    }
  }
  return sys;
}

EquilibriumSolution solve_equilibrium(const PatternSet& ps) {
  const EquilibriumSystem sys = build_equilibrium_system(ps);
  EquilibriumSolution sol;
  sol.y = solve_linear_system(sys.a, sys.rhs);
  Rat total;
  for (const auto& y : sol.y) {
    if (y.sign() <= 0) throw DomainError("equilibrium win rate is not positive: " + y.str());
    total += y;
  }
  for (const auto& y : sol.y) sol.win_probs.push_back(y / total);
  sol.expected_duration = Rat(1) / total;
  return sol;
}

}  // namespace patdual
