#include "patdual/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "patdual/errors.hpp"

namespace patdual {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat();
  return c_[static_cast<std::size_t>(i)];
}

Rat Poly::eval(const Rat& z) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rat& s) const {
  if (s.is_zero()) return {};
  Poly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(Rat(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const mpq_class& ai = a.c_[i].mpq();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      acc[i + j] += ai * b.c_[j].mpq();
    }
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};
  std::vector<Rat> rem = c_;
  const int dd = divisor.degree();
  std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rat inv_lead = Rat(1) / divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rat q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divide_by_z_minus_one() const {
  if (is_zero()) return {};
  // Horner-style synthetic division by the root 1.
  std::vector<Rat> q(c_.size() - 1);
  Rat carry;
  for (std::size_t k = c_.size(); k-- > 1;) {
    carry += c_[k];
    q[k - 1] = carry;
  }
  if (!(carry + c_[0]).is_zero()) throw DomainError("polynomial does not vanish at z = 1");
  return Poly(std::move(q));
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rat c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (i == 0 || !c.is_one()) {
      if (first && c == Rat(-1) && i > 0) os << "-";
      else os << c.str();
      if (i > 0 && !(first && c == Rat(-1))) os << "*";
    }
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace patdual
