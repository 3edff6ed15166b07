#include "patdual/simulate.hpp"

#include <limits>
#include <random>

#include "patdual/errors.hpp"

namespace patdual {

namespace {

// Draws alphabet indices. Exact integer weights over the common denominator
// when it fits in 62 bits, otherwise cumulative doubles.
class SymbolSampler {
 public:
  explicit SymbolSampler(const Alphabet& alphabet) {
    mpz_class common = 1;
    for (const auto& p : alphabet.probs()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.mpq().get_den_mpz_t());
    if (mpz_sizeinbase(common.get_mpz_t(), 2) <= 62) {
      denom_ = common.get_ui();
      std::uint64_t acc = 0;
      for (const auto& p : alphabet.probs()) {
        mpz_class w = common * p.mpq().get_num() / p.mpq().get_den();
        acc += w.get_ui();
        cumulative_.push_back(acc);
      }
      reject_below_ = (0 - denom_) % denom_;
    } else {
      double acc = 0;
      for (const auto& p : alphabet.probs()) {
        acc += p.to_double();
        cumulative_real_.push_back(acc);
      }
    }
  }

  int operator()(std::mt19937_64& rng) const {
    if (denom_ != 0) {
      std::uint64_t r;
      do {
        r = rng();
      } while (r < reject_below_);
      const std::uint64_t v = r % denom_;
      int s = 0;
      while (v >= cumulative_[static_cast<std::size_t>(s)]) ++s;
      return s;
    }
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    int s = 0;
    while (s + 1 < static_cast<int>(cumulative_real_.size()) && u >= cumulative_real_[static_cast<std::size_t>(s)]) ++s;
    return s;
  }

 private:
  std::uint64_t denom_ = 0;
  std::uint64_t reject_below_ = 0;
  std::vector<std::uint64_t> cumulative_;
  std::vector<double> cumulative_real_;
};

SimReport run_block(const SuffixAutomaton& a, const SymbolSampler& draw, std::uint64_t seed, std::uint64_t block,
                    std::uint64_t games) {
  std::mt19937_64 rng(splitmix64(seed + block * 0x9e3779b97f4a7c15ULL));
  SimReport r;
  r.wins.assign(a.pattern_count(), 0);
  r.games = games;
  for (std::uint64_t g = 0; g < games; ++g) {
    int state = 0;
    std::uint64_t steps = 0;
    while (!a.is_absorbing(state)) {
      state = a.next(static_cast<std::size_t>(state), draw(rng));
      ++steps;
    }
    ++r.wins[a.winner(state)];
    r.duration_sum += steps;
    r.duration_sq_sum += steps * steps;
  }
  return r;
}

void merge_into(SimReport& total, const SimReport& part) {
  total.games += part.games;
  for (std::size_t i = 0; i < total.wins.size(); ++i) total.wins[i] += part.wins[i];
  total.duration_sum += part.duration_sum;
  total.duration_sq_sum += part.duration_sq_sum;
}

std::uint64_t block_games(std::uint64_t games, std::uint64_t block) {
  const std::uint64_t start = block * kSimBlockGames;
  return std::min(kSimBlockGames, games - start);
}

void check_games(std::uint64_t games) {
  if (games == 0) throw PreconditionError("simulate: at least one game is required");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SimReport simulate(const PatternSet& ps, std::uint64_t games, std::uint64_t seed) {
  check_games(games);
  const SuffixAutomaton a = build_automaton(ps);
  const SymbolSampler draw(ps.alphabet());
  const auto blocks = static_cast<std::int64_t>((games + kSimBlockGames - 1) / kSimBlockGames);
  std::vector<SimReport> parts(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    parts[static_cast<std::size_t>(b)] = run_block(a, draw, seed, ub, block_games(games, ub));
  }

  SimReport total;
  total.seed = seed;
  total.wins.assign(ps.size(), 0);
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

SimReport simulate_serial(const PatternSet& ps, std::uint64_t games, std::uint64_t seed) {
  check_games(games);
  const SuffixAutomaton a = build_automaton(ps);
  const SymbolSampler draw(ps.alphabet());
  SimReport total;
  total.seed = seed;
  total.wins.assign(ps.size(), 0);
  for (std::uint64_t b = 0; b * kSimBlockGames < games; ++b) merge_into(total, run_block(a, draw, seed, b, block_games(games, b)));
  return total;
}

}  // namespace patdual
