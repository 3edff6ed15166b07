#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patdual/rat.hpp"

namespace patdual {

/// A run of symbols, stored as alphabet indices. May be empty.
using SymbolString = std::vector<int>;

/// Symbol labels with exact probabilities. Every probability lies strictly in
/// (0, 1) and they sum to exactly 1; there are at least two symbols.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> labels, std::vector<Rat> probs);

  /// "H:1/2,T:1/2". Probabilities must be fraction or integer literals.
  static Alphabet parse(std::string_view text);
  /// Two-symbol coin {H, T} with P(H) = p.
  static Alphabet coin(const Rat& p);
  /// n equally likely symbols labelled 1..n.
  static Alphabet uniform(int n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const Rat& prob(int i) const { return probs_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rat>& probs() const { return probs_; }
  /// True when every label is one character, so pattern literals need no delimiter.
  bool single_char_labels() const;
  /// Index of the label, or -1.
  int find(std::string_view label) const;

  std::string str() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rat> probs_;
};

/// Nonempty symbol string over a shared alphabet.
class Pattern {
 public:
  Pattern(std::shared_ptr<const Alphabet> alphabet, SymbolString symbols);

  /// Bare labels ("TTHT") when the alphabet has single-character labels,
  /// otherwise comma-separated labels ("10,J,Q"). Commas are always accepted.
  static Pattern parse(std::string_view text, std::shared_ptr<const Alphabet> alphabet);

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const SymbolString& symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }

  std::string str() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.symbols_ == b.symbols_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  SymbolString symbols_;
};

/// Patterns over one alphabet, pairwise distinct, none a contiguous substring
/// of another. Only obtainable through validate_pattern_set.
class PatternSet {
 public:
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
  std::size_t size() const { return patterns_.size(); }

 private:
  friend PatternSet validate_pattern_set(std::vector<Pattern> patterns);
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Pattern> patterns_;
};

/// Throws PreconditionError for an empty list, mixed alphabets, duplicates, or
/// a pattern contained in another (the message names both indices).
PatternSet validate_pattern_set(std::vector<Pattern> patterns);

/// Product of symbol probabilities; 1 for the empty string.
Rat string_probability(std::span<const int> symbols, const Alphabet& alphabet);

/// Ascending shifts i such that the last i symbols of s equal the first i of w.
std::vector<std::size_t> correlation_set(std::span<const int> s, std::span<const int> w);
std::vector<std::size_t> correlation_set(const Pattern& s, const Pattern& w);

/// Largest shift in correlation_set, or 0 when it is empty.
std::size_t max_overlap(std::span<const int> s, std::span<const int> w);
std::size_t max_overlap(const Pattern& s, const Pattern& w);

/// First max_overlap(s, w) symbols of w (equivalently the same-length suffix of s).
SymbolString overlap_string(const Pattern& s, const Pattern& w);

/// True when needle occurs contiguously inside haystack.
bool contains_substring(std::span<const int> haystack, std::span<const int> needle);

std::string symbols_to_string(std::span<const int> symbols, const Alphabet& alphabet);

}  // namespace patdual
