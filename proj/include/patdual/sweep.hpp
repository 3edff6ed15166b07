#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patdual/duel.hpp"
#include "patdual/equilibrium.hpp"
#include "patdual/oracle.hpp"

namespace patdual {

/// Every pattern over the alphabet with min_len <= length <= max_len, in
/// length-then-lexicographic order.
std::vector<Pattern> enumerate_patterns(const std::shared_ptr<const Alphabet>& alphabet, std::size_t min_len,
                                        std::size_t max_len);

/// All size-k subsets (in index order) of `pool` that pass validate_pattern_set.
std::vector<PatternSet> enumerate_valid_sets(const std::vector<Pattern>& pool, std::size_t k);

/// Outcome of solving one pattern set three independent ways.
struct CrossCheck {
  std::vector<Rat> duel_win_probs;
  Rat duel_mean;
  std::vector<Rat> equilibrium_win_probs;
  Rat equilibrium_mean;
  std::vector<Rat> oracle_win_probs;
  Rat oracle_mean;
  Rat oracle_variance;
  Rat duel_variance;

  bool duel_matches_equilibrium() const {
    return duel_win_probs == equilibrium_win_probs && duel_mean == equilibrium_mean;
  }
  bool duel_matches_oracle() const {
    return duel_win_probs == oracle_win_probs && duel_mean == oracle_mean && duel_variance == oracle_variance;
  }

  friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

CrossCheck cross_check(const PatternSet& ps);

/// OpenMP-parallel over sets; results are in input order.
std::vector<CrossCheck> cross_check_sweep(const std::vector<PatternSet>& sets);
std::vector<CrossCheck> cross_check_sweep_serial(const std::vector<PatternSet>& sets);

struct ResponseCandidate {
  Pattern response;
  std::optional<Rat> win_prob;  // empty when skipped
  std::string skipped_reason;
};

/// All |alphabet|^length responses to `opponent`, each solved as a duel with
/// the response listed first. Ranked by win probability (descending, ties in
/// enumeration order); skipped candidates come last.
std::vector<ResponseCandidate> best_response(const Pattern& opponent, std::size_t length);
std::vector<ResponseCandidate> best_response_serial(const Pattern& opponent, std::size_t length);

}  // namespace patdual
