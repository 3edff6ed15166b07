#include "patdual/rational_function.hpp"

#include <ostream>

#include "patdual/errors.hpp"

namespace patdual {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    const Rat s = Rat(1) / den_.leading();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

Rat RationalFunction::eval(const Rat& z) const {
  const Rat d = den_.eval(z);
  if (d.is_zero()) throw DomainError("rational function has a pole at z = " + z.str());
  return num_.eval(z) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RationalFunction::limit_at_one() const { return patdual::limit_at_one(num_, den_); }

SeriesPrefix RationalFunction::series(std::size_t n) const { return series_expand(num_, den_, n); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ - o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of the zero rational function");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return "(" + num_.str() + ")";
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Rat limit_at_one(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("limit of a rational function with zero denominator");
  while (!num.is_zero() && num.eval(1).is_zero() && den.eval(1).is_zero()) {
    num = num.divide_by_z_minus_one();
    den = den.divide_by_z_minus_one();
  }
  const Rat d = den.eval(1);
  if (d.is_zero()) {
    if (num.is_zero()) return Rat();
    throw DomainError("rational function has a pole at z = 1");
  }
  return num.eval(1) / d;
}

std::vector<Rat> derivative_limits_at_one(const RationalFunction& f, int order) {
  std::vector<Rat> out;
  const Poly& den = f.den();
  const Poly dden = den.derivative();
  Poly p = f.num();
  Poly den_power = den;
  for (int k = 0; k <= order; ++k) {
    out.push_back(limit_at_one(p, den_power));
    if (k == order) break;
    p = p.derivative() * den - (p * dden).scaled(Rat(k + 1));
    den_power = den_power * den;
  }
  return out;
}

SeriesPrefix series_expand(const Poly& num, const Poly& den, std::size_t n) {
  if (den.is_zero() || den.coeff(0).is_zero()) {
    throw DomainError("not a power series: denominator has no constant term");
  }
  const auto& d = den.coefficients();
  const mpq_class inv_d0 = 1 / d[0].mpq();
  std::vector<mpq_class> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpq_class acc = num.coeff(static_cast<int>(k)).mpq();
    const std::size_t top = std::min(k, d.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (!d[j].is_zero()) acc -= d[j].mpq() * c[k - j];
    }
    c[k] = acc * inv_d0;
  }
  SeriesPrefix out;
  out.reserve(n + 1);
  for (auto& q : c) out.emplace_back(std::move(q));
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace patdual
