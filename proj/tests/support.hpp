#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// generating-function code paths it is used to check.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "patdual/patterns.hpp"
#include "patdual/rational_function.hpp"

namespace patdual::testing {

inline std::shared_ptr<const Alphabet> coin(const Rat& p) { return std::make_shared<const Alphabet>(Alphabet::coin(p)); }

inline Pattern pat(const std::string& text, const std::shared_ptr<const Alphabet>& a) { return Pattern::parse(text, a); }

inline PatternSet pset(const std::vector<std::string>& texts, const std::shared_ptr<const Alphabet>& a) {
  std::vector<Pattern> ps;
  for (const auto& t : texts) ps.push_back(pat(t, a));
  return validate_pattern_set(std::move(ps));
}

inline Rat random_rat(std::mt19937_64& rng, long max_num = 9, long max_den = 9, bool allow_negative = true) {
  std::uniform_int_distribution<long> num(allow_negative ? -max_num : 0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rat(rng);
  if (c.back().is_zero()) c.back() = Rat(1);
  return Poly(std::move(c));
}

/// Alphabet of `size` symbols labelled a, b, c, ... with random probabilities
/// that are strictly positive and sum to 1.
inline std::shared_ptr<const Alphabet> random_alphabet(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<long> w(1, 9);
  std::vector<long> weights(static_cast<std::size_t>(size));
  long total = 0;
  for (auto& x : weights) total += (x = w(rng));
  std::vector<std::string> labels;
  std::vector<Rat> probs;
  for (int i = 0; i < size; ++i) {
    labels.emplace_back(1, static_cast<char>('a' + i));
    probs.emplace_back(weights[static_cast<std::size_t>(i)], total);
  }
  return std::make_shared<const Alphabet>(std::move(labels), std::move(probs));
}

inline Pattern random_pattern(std::mt19937_64& rng, const std::shared_ptr<const Alphabet>& a, std::size_t min_len,
                              std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> sym(0, static_cast<int>(a->size()) - 1);
  SymbolString s(len(rng));
  for (auto& x : s) x = sym(rng);
  return Pattern(a, std::move(s));
}

/// Calls visit(sequence, probability) for each of the |alphabet|^n sequences.
inline void for_each_sequence(const Alphabet& a, std::size_t n,
                              const std::function<void(const SymbolString&, const Rat&)>& visit) {
  SymbolString seq(n, 0);
  const int base = static_cast<int>(a.size());
  while (true) {
    Rat p(1);
    for (int s : seq) p *= a.prob(s);
    visit(seq, p);
    std::size_t pos = n;
    while (pos > 0 && seq[pos - 1] == base - 1) seq[--pos] = 0;
    if (pos == 0) return;
    ++seq[pos - 1];
  }
}

inline bool ends_at(const SymbolString& seq, std::size_t end, const SymbolString& pattern) {
  if (end < pattern.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (seq[end - pattern.size() + i] != pattern[i]) return false;
  }
  return true;
}

/// u_0..u_n: probability that a non-overlapping (reset-on-completion)
/// occurrence of the pattern ends exactly at trial n. Exhaustive.
inline SeriesPrefix brute_renewal(const Pattern& s, std::size_t n) {
  SeriesPrefix u(n + 1);
  u[0] = Rat(1);
  for (std::size_t len = 1; len <= n; ++len) {
    Rat acc;
    for_each_sequence(s.alphabet(), len, [&](const SymbolString& seq, const Rat& p) {
      std::size_t last_end = 0;
      bool at_end = false;
      for (std::size_t t = 1; t <= len; ++t) {
        if (t - last_end >= s.length() && ends_at(seq, t, s.symbols())) {
          last_end = t;
          at_end = (t == len);
        }
      }
      if (at_end) acc += p;
    });
    u[len] = acc;
  }
  return u;
}

/// x_{i,0..n}: probability pattern i is the first of the set to appear and
/// does so ending at trial n. Exhaustive.
inline SeriesPrefix brute_first_win(const PatternSet& ps, std::size_t i, std::size_t n) {
  SeriesPrefix x(n + 1);
  for (std::size_t len = 1; len <= n; ++len) {
    Rat acc;
    for_each_sequence(ps.alphabet(), len, [&](const SymbolString& seq, const Rat& p) {
      for (std::size_t t = 1; t <= len; ++t) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
          if (ends_at(seq, t, ps[j].symbols())) {
            if (t == len && j == i) acc += p;
            return;
          }
        }
      }
    });
    x[len] = acc;
  }
  return x;
}

/// Shift scan straight from the definition, independent of correlation_set.
inline std::vector<std::size_t> brute_shifts(const SymbolString& s, const SymbolString& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= s.size() && i <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < i; ++t) ok = ok && s[s.size() - i + t] == w[t];
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace patdual::testing
