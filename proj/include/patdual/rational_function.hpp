#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "patdual/poly.hpp"

namespace patdual {

/// Maclaurin coefficients c_0 .. c_n.
using SeriesPrefix = std::vector<Rat>;

/// num(z) / den(z) kept in canonical form: gcd(num, den) = 1 and den monic.
/// The zero function is 0/1. Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(const Rat& c)  // NOLINT(google-explicit-constructor)
      : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
  /// Throws DomainError if den is the zero polynomial.
  RationalFunction(Poly num, Poly den);

  static RationalFunction z() { return RationalFunction(Poly::monomial(1, 1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }

  /// Throws DomainError when den(z) = 0.
  Rat eval(const Rat& z) const;
  RationalFunction derivative() const;
  /// Value at z = 1, cancelling removable (z - 1) factors first.
  Rat limit_at_one() const;
  /// Exact c_0..c_n via the recurrence den * series = num.
  SeriesPrefix series(std::size_t n) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction reciprocal() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string str() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

/// lim_{z->1} num/den for a possibly non-reduced pair. Cancels (z - 1) by
/// synthetic division while both vanish at 1; throws DomainError on a pole.
Rat limit_at_one(Poly num, Poly den);

/// [f(1), f'(1), ..., f^(order)(1)] as limits. The k-th derivative is kept
/// as P_k / den^(k+1), P_{k+1} = P_k' den - (k+1) P_k den', so no gcd is
/// taken along the way; each value goes through limit_at_one.
std::vector<Rat> derivative_limits_at_one(const RationalFunction& f, int order);

/// Series of num/den; den(0) must be nonzero.
SeriesPrefix series_expand(const Poly& num, const Poly& den, std::size_t n);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace patdual
