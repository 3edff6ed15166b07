#include <random>

#include "doctest.h"
#include "patdual/errors.hpp"
#include "patdual/linear_solve.hpp"
#include "patdual/rational_function.hpp"
#include "support.hpp"

using namespace patdual;
using patdual::testing::random_poly;
using patdual::testing::random_rat;

namespace {

const Poly kZ{Rat(0), Rat(1)};
const Poly kOneMinusZ{Rat(1), Rat(-1)};

// Derivative of a polynomial at a point, from the power rule term by term.
Rat power_rule_at(const Poly& p, const Rat& z) {
  Rat acc;
  for (int i = 1; i <= p.degree(); ++i) acc += Rat(i) * p.coeff(i) * pow(z, static_cast<unsigned>(i - 1));
  return acc;
}

}  // namespace

TEST_CASE("rat arithmetic is exact and canonical") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(pow(Rat(1, 2), 2) * pow(Rat(1, 2), 7) == Rat(1, 512));
  CHECK(Rat(7, 3) - Rat(1, 3) == Rat(2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("rat parsing") {
  CHECK(Rat::parse("62/71") == Rat(62, 71));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("4/8").str() == "1/2");
  CHECK_THROWS_AS(Rat::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("a/b"), ParseError);
}

TEST_CASE("poly arithmetic and gcd") {
  const Poly one_plus_z{Rat(1), Rat(1)};
  CHECK(kOneMinusZ * one_plus_z == Poly{Rat(1), Rat(0), Rat(-1)});
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK((kZ - kZ).is_zero());

  const Poly z2_minus_1{Rat(-1), Rat(0), Rat(1)};
  const Poly z_minus_1{Rat(-1), Rat(1)};
  CHECK(gcd(z2_minus_1, z_minus_1) == z_minus_1);
  CHECK(gcd(z_minus_1, one_plus_z) == Poly::constant(1));
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly(), Poly{Rat(2), Rat(4)}) == Poly{Rat(1, 2), Rat(1)});

  auto [q, r] = z2_minus_1.divmod(z_minus_1);
  CHECK(q == one_plus_z);
  CHECK(r.is_zero());
  CHECK(z2_minus_1.divide_by_z_minus_one() == one_plus_z);
  CHECK_THROWS_AS(one_plus_z.divide_by_z_minus_one(), DomainError);
  CHECK_THROWS_AS(kZ.divmod(Poly()), DomainError);
}

TEST_CASE("rational function arithmetic") {
  const RationalFunction geometric(Poly::constant(1), kOneMinusZ);
  CHECK(geometric - RationalFunction(Rat(1)) == RationalFunction(kZ, kOneMinusZ));

  const RationalFunction a(Poly{Rat(1), Rat(2), Rat(3)}, Poly{Rat(5), Rat(0), Rat(1)});
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(a / RationalFunction(), DomainError);
  CHECK_THROWS_AS(RationalFunction(kZ, Poly()), DomainError);

  // p z / (1 - q z) at p = 1/2: monic denominator z - 2 forces numerator -z.
  const RationalFunction g(Poly::monomial(Rat(1, 2), 1), Poly{Rat(1), Rat(-1, 2)});
  CHECK(g.den() == Poly{Rat(-2), Rat(1)});
  CHECK(g.num() == Poly::monomial(Rat(-1), 1));
}

TEST_CASE("series expansion") {
  const RationalFunction g(Poly::monomial(Rat(1, 2), 1), Poly{Rat(1), Rat(-1, 2)});
  CHECK(g.series(3) == SeriesPrefix{Rat(0), Rat(1, 2), Rat(1, 4), Rat(1, 8)});
  CHECK(RationalFunction(Rat(1)).series(2) == SeriesPrefix{Rat(1), Rat(0), Rat(0)});
  CHECK_THROWS_AS(RationalFunction(Poly::constant(1), kZ).series(3), DomainError);

  // F(z) of TTHTTTTHT at p = q = 1/2, built from its displayed closed form.
  const Rat p(1, 2), q(1, 2);
  const Poly corr = Poly::monomial(p * p * pow(q, 6), 8) + Poly::monomial(p * pow(q, 4), 5) + Poly::constant(1);
  const Poly lead = Poly::monomial(p * p * pow(q, 7), 9);
  const RationalFunction f(lead, lead + kOneMinusZ * corr);
  const Rat closed = p * p * pow(q, 7) * (Rat(1) - p * pow(q, 4) - p * p * pow(q, 6) - p * p * pow(q, 7));
  CHECK(closed == Rat(493, 262144));
  CHECK(f.series(18)[18] == closed);
}

TEST_CASE("derivative") {
  CHECK(RationalFunction(Poly::monomial(1, 2)).derivative() == RationalFunction(Poly::monomial(2, 1)));
  const RationalFunction geometric(Poly::constant(1), kOneMinusZ);
  CHECK(geometric.derivative() == RationalFunction(Poly::constant(1), kOneMinusZ * kOneMinusZ));
  const RationalFunction g(Poly::monomial(Rat(1, 2), 1), Poly{Rat(1), Rat(-1, 2)});
  CHECK(g.derivative().eval(1) == Rat(2));
}

TEST_CASE("limit at one") {
  CHECK(RationalFunction(kZ).limit_at_one() == Rat(1));
  CHECK(limit_at_one(Poly{Rat(1), Rat(0), Rat(-1)}, kOneMinusZ) == Rat(2));
  CHECK(limit_at_one(kOneMinusZ * kOneMinusZ * kZ, kOneMinusZ * kOneMinusZ * Poly{Rat(3), Rat(1)}) == Rat(1, 4));
  CHECK_THROWS_AS(RationalFunction(Poly::constant(1), kOneMinusZ).limit_at_one(), DomainError);
  CHECK_THROWS_AS(limit_at_one(kZ, kOneMinusZ * kOneMinusZ), DomainError);
}

TEST_CASE("linear solve over rationals") {
  const Matrix<Rat> id{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(solve_linear_system(id, std::vector<Rat>{Rat(3), Rat(-7, 2)}) == std::vector<Rat>{Rat(3), Rat(-7, 2)});
  const Matrix<Rat> diag{{Rat(2), Rat(0)}, {Rat(0), Rat(4)}};
  CHECK(solve_linear_system(diag, std::vector<Rat>{Rat(1), Rat(1)}) == std::vector<Rat>{Rat(1, 2), Rat(1, 4)});
  // Needs a row swap.
  const Matrix<Rat> swap{{Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(solve_linear_system(swap, std::vector<Rat>{Rat(2), Rat(5)}) == std::vector<Rat>{Rat(3), Rat(2)});

  const Matrix<Rat> singular{{Rat(1), Rat(2), Rat(0)}, {Rat(2), Rat(4), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  try {
    solve_linear_system(singular, std::vector<Rat>(3, Rat(1)));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(solve_linear_system(diag, std::vector<Rat>{Rat(1)}), PreconditionError);
}

TEST_CASE("linear solve over rational functions") {
  const RationalFunction z = RationalFunction::z();
  const RationalFunction one(Rat(1));
  const Matrix<RationalFunction> a{{one, z}, {z, one}};
  const auto x = solve_linear_system(a, std::vector<RationalFunction>{one, one});
  const RationalFunction expect(Poly::constant(1), Poly{Rat(1), Rat(1)});
  CHECK(x[0] == expect);
  CHECK(x[1] == expect);
}

TEST_CASE("property: series times denominator reproduces numerator") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly den = random_poly(rng, 4);
    if (den.coeff(0).is_zero()) den += Poly::constant(1);
    const Poly num = random_poly(rng, 5);
    const RationalFunction f(num, den);
    const std::size_t n = 15;
    const SeriesPrefix c = f.series(n);
    for (std::size_t k = 0; k <= n; ++k) {
      Rat conv;
      for (std::size_t j = 0; j <= k; ++j) conv += f.den().coeff(static_cast<int>(j)) * c[k - j];
      CHECK(conv == f.num().coeff(static_cast<int>(k)));
    }
  }
}

TEST_CASE("property: common factors cancel to the same canonical pair") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, 3);
    const Poly b = random_poly(rng, 3);
    const Poly g = random_poly(rng, 3);
    if (b.is_zero() || g.is_zero()) continue;
    CHECK(RationalFunction(a * g, b * g) == RationalFunction(a, b));
    CHECK(RationalFunction(a * g, b * g).den().leading().is_one());
  }
}

TEST_CASE("property: derivative matches a pointwise quotient rule") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly num = random_poly(rng, 4);
    Poly den = random_poly(rng, 4);
    if (den.is_zero()) den = Poly::constant(1);
    const RationalFunction f(num, den);
    const RationalFunction df = f.derivative();
    int checked = 0;
    while (checked < 20) {
      const Rat z0 = random_rat(rng, 20, 7);
      const Rat d = den.eval(z0);
      if (d.is_zero()) continue;
      const Rat expect = (power_rule_at(num, z0) * d - num.eval(z0) * power_rule_at(den, z0)) / (d * d);
      CHECK(df.eval(z0) == expect);
      ++checked;
    }
  }
}

TEST_CASE("property: limit at one equals evaluation when there is no pole") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly num = random_poly(rng, 4);
    const Poly den = random_poly(rng, 4);
    if (den.is_zero() || den.eval(1).is_zero()) continue;
    CHECK(limit_at_one(num, den) == num.eval(1) / den.eval(1));
    CHECK(RationalFunction(num * kOneMinusZ, den * kOneMinusZ).limit_at_one() == num.eval(1) / den.eval(1));
  }
}

TEST_CASE("property: derivative limits agree with repeated canonical derivatives") {
  std::mt19937_64 rng(15);
  int checked = 0;
  while (checked < 25) {
    const Poly num = random_poly(rng, 4);
    const Poly den = random_poly(rng, 4);
    if (den.is_zero() || den.eval(1).is_zero()) continue;
    const RationalFunction f(num * kOneMinusZ, den * kOneMinusZ);
    const std::vector<Rat> lim = derivative_limits_at_one(f, 3);
    RationalFunction g = f;
    for (int k = 0; k <= 3; ++k) {
      CHECK(lim[static_cast<std::size_t>(k)] == g.limit_at_one());
      g = g.derivative();
    }
    ++checked;
  }
}
