#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpt {

/// 0-based index into an Alphabet.
using Letter = int;
using Word = std::vector<Letter>;

/// Ordered list of distinct variable names.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws StructuralError on duplicate, empty or whitespace-containing names.
  explicit Alphabet(std::vector<std::string> names);

  /// Names "<prefix>1", ..., "<prefix>k".
  static Alphabet numbered(std::string_view prefix, int k);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Letter letter) const { return names_.at(static_cast<std::size_t>(letter)); }
  const std::vector<std::string>& names() const { return names_; }

  /// Throws StructuralError if absent.
  Letter index(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Space-separated names; "" for the empty word.
  std::string format(std::span<const Letter> word) const;
  /// Inverse of format. Throws StructuralError on unknown names.
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Dense indexing of all words of length 0..order over k letters: by length,
/// then lexicographically with the first letter most significant.
class WordLayout {
 public:
  WordLayout() = default;
  /// Throws CapacityError if the table would exceed kMaxTableEntries.
  WordLayout(int letters, int order);

  int letters() const { return letters_; }
  int order() const { return order_; }
  std::size_t size() const { return offset_.back(); }
  std::size_t offset(int length) const { return offset_[static_cast<std::size_t>(length)]; }
  std::size_t count(int length) const { return offset(length + 1) - offset(length); }

  std::size_t index(std::span<const Letter> word) const;
  Word word_at(std::size_t index) const;
  int length_at(std::size_t index) const;

  friend bool operator==(const WordLayout&, const WordLayout&) = default;

 private:
  int letters_ = 0;
  int order_ = 0;
  std::vector<std::size_t> offset_{0};
};

inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

Word reversed(std::span<const Letter> word);
Word concat(std::span<const Letter> a, std::span<const Letter> b);

/// Every word of exactly the given length, lexicographic.
std::vector<Word> all_words(int letters, int length);

}  // namespace fpt
