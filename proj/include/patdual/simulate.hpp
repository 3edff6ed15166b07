#pragma once

#include <cstdint>
#include <vector>

#include "patdual/automaton.hpp"

namespace patdual {

/// Monte Carlo tallies. Sums are integers so merging is order independent.
struct SimReport {
  std::uint64_t games = 0;
  std::vector<std::uint64_t> wins;
  std::uint64_t duration_sum = 0;
  std::uint64_t duration_sq_sum = 0;
  std::uint64_t seed = 0;

  double win_frequency(std::size_t i) const { return static_cast<double>(wins[i]) / static_cast<double>(games); }
  double mean_duration() const { return static_cast<double>(duration_sum) / static_cast<double>(games); }

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Games are cut into fixed blocks of kSimBlockGames. Block b draws from a
/// std::mt19937_64 seeded with splitmix64(seed + b * 0x9e3779b97f4a7c15);
/// each symbol consumes 64-bit outputs by rejection sampling against the
/// common denominator of the alphabet. The report therefore depends only on
/// (ps, games, seed), never on the number of threads.
inline constexpr std::uint64_t kSimBlockGames = 1u << 14;

/// OpenMP-parallel over blocks.
SimReport simulate(const PatternSet& ps, std::uint64_t games, std::uint64_t seed);

/// Serial reference; produces the same report as simulate().
SimReport simulate_serial(const PatternSet& ps, std::uint64_t games, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace patdual
