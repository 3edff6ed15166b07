#pragma once

#include <vector>

#include "patdual/automaton.hpp"
#include "patdual/rational_function.hpp"

namespace patdual {

/// Exact absorbing-chain quantities computed on the suffix automaton.
struct OracleResult {
  std::vector<Rat> win_probs;
  Rat mean;
  Rat variance;
};

/// Solves (I - Q) h = r_i for absorption probabilities and (I - Q) t = 1,
/// (I - Q) s = 1 + 2 Q t for the first two moments of the absorption time.
OracleResult oracle_win_probs(const PatternSet& ps);

/// f_0..f_n by pushing the occupancy vector of the single-pattern automaton.
SeriesPrefix oracle_first_passage(const Pattern& s, std::size_t n);

/// Same DP, but started in the automaton state of `head` (a proper prefix of
/// s), so entry n is P(s first completed at trial n | head already seen).
SeriesPrefix oracle_first_passage_from(const Pattern& s, const SymbolString& head, std::size_t n);

}  // namespace patdual
