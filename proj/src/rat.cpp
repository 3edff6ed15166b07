#include "patdual/rat.hpp"

#include <cctype>
#include <ostream>

#include "patdual/errors.hpp"

namespace patdual {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, 1) / mpq_class(den, 1);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not an exact fraction literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace patdual
