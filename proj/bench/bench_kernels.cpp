// Serial reference vs OpenMP kernels: wall time and result equality.
//
//   bench_kernels [games] [threads]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>

#include "patdual/simulate.hpp"
#include "patdual/sweep.hpp"

using namespace patdual;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t games = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1'000'000;
  if (argc > 2) omp_set_num_threads(std::atoi(argv[2]));
  std::printf("threads %d, games %llu\n", omp_get_max_threads(), static_cast<unsigned long long>(games));

  const auto coin = std::make_shared<const Alphabet>(Alphabet::coin(Rat(1, 2)));
  const PatternSet long_pair = validate_pattern_set({Pattern::parse("TTTHTTT", coin), Pattern::parse("TTHTTTTHT", coin)});

  SimReport s, p;
  const double ts = seconds([&] { s = simulate_serial(long_pair, games, 42); });
  const double tp = seconds([&] { p = simulate(long_pair, games, 42); });
  row("simulate (long_pair duel)", ts, tp, s == p);

  const auto sets = enumerate_valid_sets(enumerate_patterns(coin, 2, 4), 2);
  std::vector<CrossCheck> cs, cp;
  const double tcs = seconds([&] { cs = cross_check_sweep_serial(sets); });
  const double tcp = seconds([&] { cp = cross_check_sweep(sets); });
  row("cross-check sweep (pairs)", tcs, tcp, cs == cp);

  const Pattern opponent = Pattern::parse("TTHTTTTHT", coin);
  std::vector<ResponseCandidate> bs, bp;
  const double tbs = seconds([&] { bs = best_response_serial(opponent, 8); });
  const double tbp = seconds([&] { bp = best_response(opponent, 8); });
  bool same = bs.size() == bp.size();
  for (std::size_t i = 0; same && i < bs.size(); ++i) same = bs[i].response == bp[i].response && bs[i].win_prob == bp[i].win_prob;
  row("best response (L = 8)", tbs, tbp, same);
  return 0;
}
