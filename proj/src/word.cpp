#include "fpt/word.hpp"

#include "fpt/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fpt {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw StructuralError("empty variable name");
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) { return std::isspace(c); })) {
      throw StructuralError("variable name contains whitespace: '" + n + "'");
    }
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name '" + n + "'");
  }
}

Alphabet Alphabet::numbered(std::string_view prefix, int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

Letter Alphabet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

bool Alphabet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::string Alphabet::format(std::span<const Letter> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += name(word[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) w.push_back(index(token));
  return w;
}

WordLayout::WordLayout(int letters, int order) : letters_(letters), order_(order) {
  if (letters < 1) throw StructuralError("alphabet must be non-empty");
  if (order < 0) throw StructuralError("negative order");
  offset_.assign(1, 0);
  std::size_t power = 1;
  for (int len = 0; len <= order; ++len) {
    offset_.push_back(offset_.back() + power);
    if (offset_.back() > kMaxTableEntries) {
      throw CapacityError("word table for " + std::to_string(letters) + " letters at order " +
                          std::to_string(order) + " exceeds " + std::to_string(kMaxTableEntries) + " entries");
    }
    power *= static_cast<std::size_t>(letters);
  }
}

std::size_t WordLayout::index(std::span<const Letter> word) const {
  if (static_cast<int>(word.size()) > order_) {
    throw StructuralError("word of length " + std::to_string(word.size()) + " exceeds order " +
                          std::to_string(order_));
  }
  std::size_t code = 0;
  for (Letter l : word) {
    if (l < 0 || l >= letters_) throw StructuralError("letter outside alphabet");
    code = code * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(l);
  }
  return offset_[word.size()] + code;
}

int WordLayout::length_at(std::size_t index) const {
  const auto it = std::upper_bound(offset_.begin(), offset_.end(), index);
  return static_cast<int>(it - offset_.begin()) - 1;
}

Word WordLayout::word_at(std::size_t index) const {
  const int len = length_at(index);
  std::size_t code = index - offset_[static_cast<std::size_t>(len)];
  Word w(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Letter>(code % static_cast<std::size_t>(letters_));
    code /= static_cast<std::size_t>(letters_);
  }
  return w;
}

Word reversed(std::span<const Letter> word) { return Word(word.rbegin(), word.rend()); }

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::vector<Word> all_words(int letters, int length) {
  WordLayout layout(letters, length);
  std::vector<Word> out;
  out.reserve(layout.count(length));
  for (std::size_t i = layout.offset(length); i < layout.size(); ++i) out.push_back(layout.word_at(i));
  return out;
}

}  // namespace fpt
