#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace patdual {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// and division by zero throws DomainError instead of aborting.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a", "-a" or "a/b" with decimal integers. No decimals, no spaces.
  static Rat parse(std::string_view text);

  const mpq_class& mpq() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace patdual
