#include "patdual/decimal.hpp"

#include "patdual/errors.hpp"

namespace patdual {

namespace {

mpz_class pow10(int digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

std::string render_scaled(mpz_class scaled, int digits, bool negative) {
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

}  // namespace

std::string format_decimal(const Rat& x, int digits) {
  if (digits < 0) throw PreconditionError("format_decimal: negative digit count");
  const bool negative = x.sign() < 0;
  const mpq_class v = abs(x.mpq()) * pow10(digits);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  const int c = cmp(mpz_class(2 * r), v.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return render_scaled(q, digits, negative);
}

std::string format_percent(const Rat& x, int digits) {
  return format_decimal(x * Rat(100), digits >= 2 ? digits - 2 : 0) + "%";
}

std::string format_sqrt(const Rat& x, int digits, bool negative) {
  if (x.sign() < 0) throw DomainError("format_sqrt: negative argument");
  if (digits < 0) throw PreconditionError("format_sqrt: negative digit count");
  const mpq_class v = x.mpq() * pow10(2 * digits);
  // s = floor(sqrt(v)) = isqrt(floor(v)).
  mpz_class fl, s;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  // Compare v with (s + 1/2)^2 = s^2 + s + 1/4.
  const mpq_class mid = mpq_class(s * s + s) + mpq_class(1, 4);
  const int c = cmp(v, mid);
  if (c > 0 || (c == 0 && mpz_odd_p(s.get_mpz_t()))) ++s;
  return render_scaled(s, digits, negative);
}

}  // namespace patdual
