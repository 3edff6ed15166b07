#pragma once

#include <span>

#include "patdual/patterns.hpp"
#include "patdual/rational_function.hpp"

namespace patdual {

/// Exact mean, variance and third central moment of a distribution on the
/// nonnegative integers. Standard deviation and skewness are irrational in
/// general and are only ever rendered from these (see decimal.hpp).
struct Moments {
  Rat mean;
  Rat variance;
  Rat third_central;
};

/// Probability generating function of a distribution on {0, 1, 2, ...}.
class Pgf {
 public:
  explicit Pgf(RationalFunction rf) : rf_(std::move(rf)) {}

  const RationalFunction& rf() const { return rf_; }
  SeriesPrefix coefficients(std::size_t n) const { return rf_.series(n); }
  /// Total mass, lim_{z->1} G(z).
  Rat total() const { return rf_.limit_at_one(); }
  Rat mean() const { return rf_.derivative().limit_at_one(); }
  /// Built from the factorial moments G'(1), G''(1), G'''(1).
  Moments moments() const;

  friend bool operator==(const Pgf&, const Pgf&) = default;

 private:
  RationalFunction rf_;
};

/// Generating function of the first completion time of a symbol string:
///   F(z) = P z^k / (P z^k + (1 - z) * sum_{l in S(.)S} P(s_{l+1..k}) z^{k-l})
/// with P the string probability. The empty string gives F = 1.
RationalFunction first_passage_gf(std::span<const int> symbols, const Alphabet& alphabet);

Pgf first_passage_pgf(const Pattern& s);

/// U(z) = 1 + F / (1 - F): generating function of the (non-overlapping)
/// completion probabilities u_n with u_0 = 1. Throws DomainError if F == 1.
RationalFunction renewal_gf_from_pgf(const Pgf& f);

/// F_{i|j} = F_i / F_{j (overlap) i}: trials to finish i after j was just
/// completed and its longest suffix that prefixes i counts as a head start.
Pgf conditional_pgf(const Pattern& i, const Pattern& j);

}  // namespace patdual
