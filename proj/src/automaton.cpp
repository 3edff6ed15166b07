#include "patdual/automaton.hpp"

#include <algorithm>
#include <map>

namespace patdual {

namespace {

bool ends_with(const SymbolString& s, const SymbolString& suffix) {
  return suffix.size() <= s.size() && std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

}  // namespace

SuffixAutomaton build_automaton(const PatternSet& ps) {
  SuffixAutomaton a;
  a.pattern_count_ = ps.size();
  a.symbol_count_ = ps.alphabet().size();

  std::map<SymbolString, int> index;
  std::vector<SymbolString> prefixes{SymbolString{}};
  for (const auto& p : ps.patterns()) {
    for (std::size_t len = 1; len < p.length(); ++len) prefixes.emplace_back(p.symbols().begin(), p.symbols().begin() + static_cast<std::ptrdiff_t>(len));
  }
  std::sort(prefixes.begin(), prefixes.end(), [](const SymbolString& x, const SymbolString& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  for (std::size_t i = 0; i < prefixes.size(); ++i) index.emplace(prefixes[i], static_cast<int>(i));
  a.states_ = std::move(prefixes);

  const std::size_t n = a.states_.size();
  a.next_.assign(n * a.symbol_count_, -1);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t c = 0; c < a.symbol_count_; ++c) {
      SymbolString u = a.states_[t];
      u.push_back(static_cast<int>(c));
      int target = -1;
      for (std::size_t i = 0; i < ps.size() && target < 0; ++i) {
        if (ends_with(u, ps[i].symbols())) target = static_cast<int>(n + i);
      }
      for (std::size_t len = u.size(); target < 0; --len) {
        auto it = index.find(SymbolString(u.end() - static_cast<std::ptrdiff_t>(len), u.end()));
        if (it != index.end()) target = it->second;
      }
      a.next_[t * a.symbol_count_ + c] = target;
    }
  }
  return a;
}

}  // namespace patdual
