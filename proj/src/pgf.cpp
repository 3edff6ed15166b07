#include "patdual/pgf.hpp"

#include "patdual/errors.hpp"

namespace patdual {

Moments Pgf::moments() const {
  const std::vector<Rat> d = derivative_limits_at_one(rf_, 3);
  const Rat& f1 = d[1];
  const Rat& f2 = d[2];
  const Rat& f3 = d[3];

  Moments m;
  m.mean = f1;
  const Rat second_raw = f2 + f1;
  const Rat third_raw = f3 + Rat(3) * f2 + f1;
  m.variance = second_raw - f1 * f1;
  m.third_central = third_raw - Rat(3) * f1 * second_raw + Rat(2) * f1 * f1 * f1;
  return m;
}

RationalFunction first_passage_gf(std::span<const int> symbols, const Alphabet& alphabet) {
  if (symbols.empty()) return RationalFunction(Rat(1));
  const int k = static_cast<int>(symbols.size());
  const Rat p_string = string_probability(symbols, alphabet);

  Poly correlation;
  for (std::size_t l : correlation_set(symbols, symbols)) {
    const Rat tail = string_probability(symbols.subspan(l), alphabet);
    correlation += Poly::monomial(tail, k - static_cast<int>(l));
  }
  const Poly leading = Poly::monomial(p_string, k);
  const Poly one_minus_z{Rat(1), Rat(-1)};
  return RationalFunction(leading, leading + one_minus_z * correlation);
}

Pgf first_passage_pgf(const Pattern& s) { return Pgf(first_passage_gf(s.symbols(), s.alphabet())); }

RationalFunction renewal_gf_from_pgf(const Pgf& f) {
  if (f.rf().is_one()) throw DomainError("renewal generating function undefined for F(z) = 1");
  const RationalFunction one(Rat(1));
  return one + f.rf() / (one - f.rf());
}

Pgf conditional_pgf(const Pattern& i, const Pattern& j) {
  const SymbolString head = overlap_string(j, i);
  return Pgf(first_passage_gf(i.symbols(), i.alphabet()) / first_passage_gf(head, i.alphabet()));
}

}  // namespace patdual
