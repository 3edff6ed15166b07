#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "patdual/rat.hpp"

namespace patdual {

/// Dense univariate polynomial in z with exact rational coefficients.
/// coefficients()[i] multiplies z^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& c) { return Poly({c}); }
  /// c * z^k
  static Poly monomial(const Rat& c, int k);

  const std::vector<Rat>& coefficients() const { return c_; }
  /// Coefficient of z^i; zero past the degree.
  Rat coeff(int i) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& z) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const Rat& s) const;

  /// Quotient and remainder; throws DomainError when divisor is zero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Synthetic division by (z - 1). Requires eval(1) == 0.
  Poly divide_by_z_minus_one() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return scaled(Rat(-1)); }

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace patdual
