#include "patdual/sweep.hpp"

#include <algorithm>

#include "patdual/errors.hpp"

namespace patdual {

std::vector<Pattern> enumerate_patterns(const std::shared_ptr<const Alphabet>& alphabet, std::size_t min_len,
                                        std::size_t max_len) {
  std::vector<Pattern> out;
  const int base = static_cast<int>(alphabet->size());
  for (std::size_t len = std::max<std::size_t>(min_len, 1); len <= max_len; ++len) {
    SymbolString s(len, 0);
    while (true) {
      out.emplace_back(alphabet, s);
      std::size_t pos = len;
      while (pos > 0 && s[pos - 1] == base - 1) s[--pos] = 0;
      if (pos == 0) break;
      ++s[pos - 1];
    }
  }
  return out;
}

std::vector<PatternSet> enumerate_valid_sets(const std::vector<Pattern>& pool, std::size_t k) {
  std::vector<PatternSet> out;
  if (k == 0 || k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Pattern> pick;
    for (std::size_t i : idx) pick.push_back(pool[i]);
    try {
      out.push_back(validate_pattern_set(std::move(pick)));
    } catch (const PreconditionError&) {
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == pool.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

CrossCheck cross_check(const PatternSet& ps) {
  CrossCheck c;
  const DuelSolution duel = solve_duel(ps);
  c.duel_win_probs = duel.win_probs;
  c.duel_mean = duel.duration_moments.mean;
  c.duel_variance = duel.duration_moments.variance;
  const EquilibriumSolution eq = solve_equilibrium(ps);
  c.equilibrium_win_probs = eq.win_probs;
  c.equilibrium_mean = eq.expected_duration;
  const OracleResult orc = oracle_win_probs(ps);
  c.oracle_win_probs = orc.win_probs;
  c.oracle_mean = orc.mean;
  c.oracle_variance = orc.variance;
  return c;
}

std::vector<CrossCheck> cross_check_sweep(const std::vector<PatternSet>& sets) {
  std::vector<CrossCheck> out(sets.size());
  const auto n = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = cross_check(sets[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<CrossCheck> cross_check_sweep_serial(const std::vector<PatternSet>& sets) {
  std::vector<CrossCheck> out;
  out.reserve(sets.size());
  for (const auto& ps : sets) out.push_back(cross_check(ps));
  return out;
}

namespace {

constexpr std::size_t kMaxCandidates = 1u << 20;

std::vector<Pattern> response_pool(const Pattern& opponent, std::size_t length) {
  if (length == 0) throw PreconditionError("best_response: response length must be at least 1");
  double count = 1;
  for (std::size_t i = 0; i < length; ++i) count *= static_cast<double>(opponent.alphabet().size());
  if (count > static_cast<double>(kMaxCandidates)) {
    throw PreconditionError("best_response: more than " + std::to_string(kMaxCandidates) + " candidate responses");
  }
  return enumerate_patterns(opponent.alphabet_ptr(), length, length);
}

ResponseCandidate evaluate(const Pattern& opponent, const Pattern& response) {
  ResponseCandidate c{response, std::nullopt, {}};
  try {
    const PatternSet ps = validate_pattern_set({response, opponent});
    c.win_prob = solve_duel(ps).win_probs[0];
  } catch (const PreconditionError& e) {
    c.skipped_reason = e.what();
  }
  return c;
}

void rank(std::vector<ResponseCandidate>& cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const ResponseCandidate& a, const ResponseCandidate& b) {
    if (a.win_prob.has_value() != b.win_prob.has_value()) return a.win_prob.has_value();
    return a.win_prob.has_value() && *a.win_prob > *b.win_prob;
  });
}

}  // namespace

std::vector<ResponseCandidate> best_response(const Pattern& opponent, std::size_t length) {
  const std::vector<Pattern> pool = response_pool(opponent, length);
  std::vector<std::optional<ResponseCandidate>> slots(pool.size());
  const auto n = static_cast<std::int64_t>(pool.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) slots[static_cast<std::size_t>(i)] = evaluate(opponent, pool[static_cast<std::size_t>(i)]);
  std::vector<ResponseCandidate> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  rank(out);
  return out;
}

std::vector<ResponseCandidate> best_response_serial(const Pattern& opponent, std::size_t length) {
  std::vector<ResponseCandidate> out;
  for (const auto& r : response_pool(opponent, length)) out.push_back(evaluate(opponent, r));
  rank(out);
  return out;
}

}  // namespace patdual
