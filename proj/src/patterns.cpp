#include "patdual/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "patdual/errors.hpp"

namespace patdual {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels, std::vector<Rat> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) throw PreconditionError("alphabet: label and probability counts differ");
  if (labels_.size() < 2) throw PreconditionError("alphabet: at least two symbols are required");
  Rat total;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw PreconditionError("alphabet: empty symbol label");
    if (labels_[i].find_first_of(",;:") != std::string::npos) {
      throw PreconditionError("alphabet: label '" + labels_[i] + "' contains a reserved character");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw PreconditionError("alphabet: duplicate symbol '" + labels_[i] + "'");
    }
    if (probs_[i].sign() <= 0 || probs_[i] >= Rat(1)) {
      throw PreconditionError("alphabet: probability of '" + labels_[i] + "' must lie strictly between 0 and 1, got " +
                              probs_[i].str());
    }
    total += probs_[i];
  }
  if (!total.is_one()) throw PreconditionError("alphabet: probabilities sum to " + total.str() + ", not 1");
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<Rat> probs;
  for (std::string_view item : split(text, ',')) {
    item = strip(item);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw ParseError("alphabet entry '" + std::string(item) + "' is not of the form label:fraction");
    }
    labels.emplace_back(strip(item.substr(0, colon)));
    probs.push_back(Rat::parse(strip(item.substr(colon + 1))));
  }
  return Alphabet(std::move(labels), std::move(probs));
}

Alphabet Alphabet::coin(const Rat& p) { return Alphabet({"H", "T"}, {p, Rat(1) - p}); }

Alphabet Alphabet::uniform(int n) {
  std::vector<std::string> labels;
  std::vector<Rat> probs;
  for (int i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    probs.emplace_back(1, n);
  }
  return Alphabet(std::move(labels), std::move(probs));
}

bool Alphabet::single_char_labels() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
}

int Alphabet::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::string Alphabet::str() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += labels_[i] + ":" + probs_[i].str();
  }
  return out;
}

Pattern::Pattern(std::shared_ptr<const Alphabet> alphabet, SymbolString symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw PreconditionError("pattern: missing alphabet");
  if (symbols_.empty()) throw PreconditionError("pattern: must contain at least one symbol");
  for (int s : symbols_) {
    if (s < 0 || static_cast<std::size_t>(s) >= alphabet_->size()) {
      throw PreconditionError("pattern: symbol index " + std::to_string(s) + " outside the alphabet");
    }
  }
}

Pattern Pattern::parse(std::string_view text, std::shared_ptr<const Alphabet> alphabet) {
  text = strip(text);
  if (text.empty()) throw ParseError("empty pattern literal");
  SymbolString symbols;
  auto lookup = [&](std::string_view label, std::size_t pos) {
    const int idx = alphabet->find(label);
    if (idx < 0) {
      throw ParseError("unknown symbol '" + std::string(label) + "' at position " + std::to_string(pos) +
                       " of pattern '" + std::string(text) + "'");
    }
    symbols.push_back(idx);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    for (std::string_view tok : split(text, ',')) {
      lookup(strip(tok), pos);
      pos += tok.size() + 1;
    }
  } else if (alphabet->single_char_labels()) {
    for (std::size_t i = 0; i < text.size(); ++i) lookup(text.substr(i, 1), i);
  } else {
    lookup(text, 0);
  }
  return Pattern(std::move(alphabet), std::move(symbols));
}

std::string Pattern::str() const { return symbols_to_string(symbols_, *alphabet_); }

std::string symbols_to_string(std::span<const int> symbols, const Alphabet& alphabet) {
  const bool bare = alphabet.single_char_labels();
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i && !bare) out += ',';
    out += alphabet.label(symbols[i]);
  }
  return out;
}

bool contains_substring(std::span<const int> haystack, std::span<const int> needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

PatternSet validate_pattern_set(std::vector<Pattern> patterns) {
  if (patterns.empty()) throw PreconditionError("pattern set is empty");
  for (std::size_t i = 1; i < patterns.size(); ++i) {
    if (!(patterns[i].alphabet() == patterns[0].alphabet())) {
      throw PreconditionError("patterns 0 and " + std::to_string(i) + " use different alphabets");
    }
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (i == j) continue;
      const auto& a = patterns[i].symbols();
      const auto& b = patterns[j].symbols();
      if (i < j && a == b) {
        throw PreconditionError("patterns " + std::to_string(i) + " and " + std::to_string(j) + " are identical (" +
                                patterns[i].str() + ")");
      }
      if (a.size() < b.size() && contains_substring(b, a)) {
        throw PreconditionError("pattern " + std::to_string(i) + " (" + patterns[i].str() +
                                ") is a substring of pattern " + std::to_string(j) + " (" + patterns[j].str() + ")");
      }
    }
  }
  PatternSet ps;
  ps.alphabet_ = patterns[0].alphabet_ptr();
  ps.patterns_ = std::move(patterns);
  return ps;
}

Rat string_probability(std::span<const int> symbols, const Alphabet& alphabet) {
  Rat p(1);
  for (int s : symbols) {
    if (s < 0 || static_cast<std::size_t>(s) >= alphabet.size()) {
      throw PreconditionError("string_probability: unknown symbol index " + std::to_string(s));
    }
    p *= alphabet.prob(s);
  }
  return p;
}

std::vector<std::size_t> correlation_set(std::span<const int> s, std::span<const int> w) {
  std::vector<std::size_t> shifts;
  const std::size_t top = std::min(s.size(), w.size());
  for (std::size_t i = 1; i <= top; ++i) {
    if (std::equal(s.end() - static_cast<std::ptrdiff_t>(i), s.end(), w.begin())) shifts.push_back(i);
  }
  return shifts;
}

std::vector<std::size_t> correlation_set(const Pattern& s, const Pattern& w) {
  return correlation_set(s.symbols(), w.symbols());
}

std::size_t max_overlap(std::span<const int> s, std::span<const int> w) {
  for (std::size_t i = std::min(s.size(), w.size()); i > 0; --i) {
    if (std::equal(s.end() - static_cast<std::ptrdiff_t>(i), s.end(), w.begin())) return i;
  }
  return 0;
}

std::size_t max_overlap(const Pattern& s, const Pattern& w) { return max_overlap(s.symbols(), w.symbols()); }

SymbolString overlap_string(const Pattern& s, const Pattern& w) {
  const std::size_t k = max_overlap(s, w);
  return SymbolString(w.symbols().begin(), w.symbols().begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace patdual
