#include "doctest.h"
#include "patdual/sweep.hpp"
#include "support.hpp"

using namespace patdual;
using namespace patdual::testing;

TEST_CASE("pattern enumeration") {
  const auto a = coin(Rat(1, 2));
  const auto pats = enumerate_patterns(a, 2, 4);
  CHECK(pats.size() == 4 + 8 + 16);
  CHECK(pats.front().str() == "HH");
  CHECK(pats.back().str() == "TTTT");

  const auto sets = enumerate_valid_sets(enumerate_patterns(a, 1, 2), 2);
  // {H,T}, {H,TT}, {T,HH} and the 6 pairs among the four length-2 patterns.
  CHECK(sets.size() == 9);
}

TEST_CASE("best response to HH") {
  const auto a = coin(Rat(1, 2));
  const auto ranked = best_response(pat("HH", a), 2);
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].response.str() == "TH");
  CHECK(*ranked[0].win_prob == Rat(3, 4));
  CHECK_FALSE(ranked.back().win_prob.has_value());
  CHECK(ranked.back().response.str() == "HH");
}

TEST_CASE("best response to a single symbol") {
  const Rat p(1, 3);
  const auto ranked = best_response(pat("H", coin(p)), 1);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].response.str() == "T");
  CHECK(*ranked[0].win_prob == Rat(2, 3));
  CHECK_FALSE(ranked[1].win_prob.has_value());
}

TEST_CASE("best response to TTHTTTTHT includes TTTHTTT") {
  const auto ranked = best_response(pat("TTHTTTTHT", coin(Rat(1, 2))), 7);
  CHECK(ranked.size() == 128);
  bool found = false;
  for (const auto& c : ranked) {
    if (c.response.str() == "TTTHTTT") {
      found = true;
      CHECK(*c.win_prob == Rat(62, 71));
    }
  }
  CHECK(found);
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    if (ranked[i].win_prob && ranked[i - 1].win_prob) CHECK(*ranked[i - 1].win_prob >= *ranked[i].win_prob);
  }
}

TEST_CASE("parallel kernels match their serial references") {
  const auto a = coin(Rat(2, 5));
  const Pattern opp = pat("HTTH", a);
  const auto par = best_response(opp, 4);
  const auto ser = best_response_serial(opp, 4);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].response == ser[i].response);
    CHECK(par[i].win_prob == ser[i].win_prob);
  }

  const auto sets = enumerate_valid_sets(enumerate_patterns(a, 2, 3), 2);
  CHECK(cross_check_sweep(sets) == cross_check_sweep_serial(sets));
}
