#include "patdual/oracle.hpp"

#include "patdual/errors.hpp"
#include "patdual/linear_solve.hpp"

namespace patdual {

namespace {

// Transient-to-transient step probabilities.
Matrix<Rat> transient_matrix(const SuffixAutomaton& a, const Alphabet& alphabet) {
  const std::size_t n = a.transient_count();
  Matrix<Rat> q(n, std::vector<Rat>(n));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t c = 0; c < a.symbol_count(); ++c) {
      const int s = a.next(t, static_cast<int>(c));
      if (!a.is_absorbing(s)) q[t][static_cast<std::size_t>(s)] += alphabet.prob(static_cast<int>(c));
    }
  }
  return q;
}

SeriesPrefix push_occupancy(const SuffixAutomaton& a, const Alphabet& alphabet, std::size_t start, std::size_t n) {
  const std::size_t states = a.transient_count();
  std::vector<mpq_class> occ(states), nxt(states);
  occ[start] = 1;
  SeriesPrefix f(n + 1);
  for (std::size_t step = 1; step <= n; ++step) {
    for (auto& v : nxt) v = 0;
    mpq_class absorbed = 0;
    for (std::size_t t = 0; t < states; ++t) {
      if (sgn(occ[t]) == 0) continue;
      for (std::size_t c = 0; c < a.symbol_count(); ++c) {
        const mpq_class mass = occ[t] * alphabet.prob(static_cast<int>(c)).mpq();
        const int s = a.next(t, static_cast<int>(c));
        if (a.is_absorbing(s)) absorbed += mass;
        else nxt[static_cast<std::size_t>(s)] += mass;
      }
    }
    f[step] = Rat(absorbed);
    occ.swap(nxt);
  }
  return f;
}

}  // namespace

OracleResult oracle_win_probs(const PatternSet& ps) {
  const SuffixAutomaton a = build_automaton(ps);
  const std::size_t n = a.transient_count();
  const Matrix<Rat> q = transient_matrix(a, ps.alphabet());

  Matrix<Rat> i_minus_q(n, std::vector<Rat>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) i_minus_q[r][c] = (r == c ? Rat(1) : Rat()) - q[r][c];
  }

  OracleResult out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<Rat> rhs(n);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t c = 0; c < a.symbol_count(); ++c) {
        if (a.next(t, static_cast<int>(c)) == static_cast<int>(a.absorbing_state(i))) rhs[t] += ps.alphabet().prob(static_cast<int>(c));
      }
    }
    out.win_probs.push_back(solve_linear_system(i_minus_q, rhs)[0]);
  }

  const std::vector<Rat> t1 = solve_linear_system(i_minus_q, std::vector<Rat>(n, Rat(1)));
  std::vector<Rat> rhs2 = mat_vec(q, t1);
  for (auto& v : rhs2) v = Rat(1) + Rat(2) * v;
  const std::vector<Rat> t2 = solve_linear_system(i_minus_q, rhs2);
  out.mean = t1[0];
  out.variance = t2[0] - t1[0] * t1[0];
  return out;
}

SeriesPrefix oracle_first_passage(const Pattern& s, std::size_t n) {
  const PatternSet ps = validate_pattern_set({s});
  return push_occupancy(build_automaton(ps), s.alphabet(), 0, n);
}

SeriesPrefix oracle_first_passage_from(const Pattern& s, const SymbolString& head, std::size_t n) {
  if (head == s.symbols()) {
    SeriesPrefix f(n + 1);
    f[0] = Rat(1);
    return f;
  }
  const PatternSet ps = validate_pattern_set({s});
  const SuffixAutomaton a = build_automaton(ps);
  for (std::size_t t = 0; t < a.transient_count(); ++t) {
    if (a.state(t) == head) return push_occupancy(a, s.alphabet(), t, n);
  }
  throw PreconditionError("oracle_first_passage_from: head start is not a prefix of the pattern");
}

}  // namespace patdual
