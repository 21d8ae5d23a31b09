#pragma once

#include "fpt/error.hpp"
#include "fpt/rational.hpp"
#include "fpt/word.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace fpt {

struct MomentTag {
  static constexpr const char* kind = "moments";
};
struct CumulantTag {
  static constexpr const char* kind = "cumulants";
};

/// Dense table T over every word of length 0..order on an alphabet.
///
/// Moment tables hold phi(empty) = 1; cumulant tables keep the empty slot at
/// zero and never read it.
template <class T, class Tag>
class WordFunctional {
 public:
  using value_type = T;
  using tag_type = Tag;

  WordFunctional() = default;

  WordFunctional(Alphabet alphabet, int order)
      : alphabet_(std::move(alphabet)), layout_(alphabet_.size(), order), values_(layout_.size(), T(0)) {
    if constexpr (std::is_same_v<Tag, MomentTag>) values_[0] = T(1);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int letters() const { return alphabet_.size(); }
  int order() const { return layout_.order(); }
  const WordLayout& layout() const { return layout_; }
  std::size_t size() const { return values_.size(); }

  const T& operator[](std::span<const Letter> word) const { return values_[layout_.index(word)]; }
  T& operator[](std::span<const Letter> word) { return values_[layout_.index(word)]; }
  const T& at(const Word& word) const { return (*this)[std::span<const Letter>(word)]; }
  T& at(const Word& word) { return (*this)[std::span<const Letter>(word)]; }

  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  Word word_at(std::size_t index) const { return layout_.word_at(index); }

  /// Same table cut to a smaller order.
  WordFunctional truncated(int order) const {
    if (order > this->order()) throw ValidationError("cannot raise the order of a table");
    WordFunctional out(alphabet_, order);
    for (std::size_t i = 0; i < out.size(); ++i) out.values_[i] = values_[i];
    return out;
  }

  /// Same values under new variable names (sizes must match).
  WordFunctional renamed(Alphabet alphabet) const {
    if (alphabet.size() != alphabet_.size()) throw StructuralError("rename: alphabet size mismatch");
    WordFunctional out = *this;
    out.alphabet_ = std::move(alphabet);
    return out;
  }

  friend bool operator==(const WordFunctional& a, const WordFunctional& b) {
    return a.alphabet_ == b.alphabet_ && a.layout_ == b.layout_ && a.values_ == b.values_;
  }

 private:
  Alphabet alphabet_;
  WordLayout layout_;
  std::vector<T> values_;
};

using MomentFunctional = WordFunctional<Rational, MomentTag>;
using CumulantFunctional = WordFunctional<Rational, CumulantTag>;
using FloatMoments = WordFunctional<double, MomentTag>;
using FloatCumulants = WordFunctional<double, CumulantTag>;

template <class Tag>
WordFunctional<double, Tag> to_float(const WordFunctional<Rational, Tag>& f) {
  WordFunctional<double, Tag> out(f.alphabet(), f.order());
  for (std::size_t i = 0; i < f.size(); ++i) out.values()[i] = to_double(f.values()[i]);
  return out;
}

/// Words w (length <= order, non-empty) with f(reverse(w)) != f(w).
template <class T, class Tag>
std::vector<Word> reversal_violations(const WordFunctional<T, Tag>& f) {
  std::vector<Word> out;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Word w = f.word_at(i);
    if (f.at(reversed(w)) != f.values()[i]) out.push_back(w);
  }
  return out;
}

/// Words w (length 2..order) whose one-step cyclic rotation changes the value.
/// Empty result means the table is tracial up to its order.
template <class T, class Tag>
std::vector<Word> trace_violations(const WordFunctional<T, Tag>& f) {
  std::vector<Word> out;
  for (std::size_t i = f.layout().offset(std::min(2, f.order() + 1)); i < f.size(); ++i) {
    const Word w = f.word_at(i);
    Word rotated(w.begin() + 1, w.end());
    rotated.push_back(w.front());
    if (f.at(rotated) != f.values()[i]) out.push_back(w);
  }
  return out;
}

}  // namespace fpt
