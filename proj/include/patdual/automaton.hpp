#pragma once

#include <cstddef>
#include <vector>

#include "patdual/patterns.hpp"

namespace patdual {

/// Deterministic automaton over the proper prefixes of a pattern set.
///
/// Transient states are the distinct proper prefixes (state 0 is the empty
/// prefix); next(t, c) is the longest suffix of t.c that is a proper prefix of
/// some pattern. When t.c ends with pattern i the successor is the absorbing
/// state transient_count() + i.
class SuffixAutomaton {
 public:
  std::size_t transient_count() const { return states_.size(); }
  std::size_t pattern_count() const { return pattern_count_; }
  std::size_t symbol_count() const { return symbol_count_; }
  const SymbolString& state(std::size_t t) const { return states_[t]; }
  int next(std::size_t t, int symbol) const { return next_[t * symbol_count_ + static_cast<std::size_t>(symbol)]; }
  bool is_absorbing(int state) const { return state >= static_cast<int>(states_.size()); }
  std::size_t absorbing_state(std::size_t pattern) const { return states_.size() + pattern; }
  /// Pattern index for an absorbing state.
  std::size_t winner(int state) const { return static_cast<std::size_t>(state) - states_.size(); }

 private:
  friend SuffixAutomaton build_automaton(const PatternSet& ps);
  std::vector<SymbolString> states_;
  std::vector<int> next_;
  std::size_t pattern_count_ = 0;
  std::size_t symbol_count_ = 0;
};

SuffixAutomaton build_automaton(const PatternSet& ps);

}  // namespace patdual
