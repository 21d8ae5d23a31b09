#pragma once

#include "fpt/functional.hpp"
#include "fpt/transform.hpp"

#include <vector>

namespace fpt {

/// Letter groups partitioning an alphabet (each letter in exactly one group).
using Grouping = std::vector<std::vector<Letter>>;

/// Joint law of mutually free families on the concatenated alphabet: pure
/// words keep each family's cumulants, mixed words get cumulant zero.
/// Throws StructuralError on a name collision, ValidationError if `order`
/// exceeds some family's order.
MomentFunctional free_product(const std::vector<MomentFunctional>& families, int order);

/// Cumulant-level version of free_product.
CumulantFunctional free_product_cumulants(const std::vector<CumulantFunctional>& families, int order);

/// The same row renamed "<name>#<copy>" for copy = 1..copies, combined freely,
/// then summed copy-wise: moments of S^(i) = sum_j a^(i)_j. Expands every
/// word of sums into copies^n joint words; meant for small cross-checks.
MomentFunctional free_copies_sum(const MomentFunctional& row, int copies, int order);

template <class T>
struct FreenessViolation {
  Word word;
  T cumulant;
};

template <class T>
struct FreenessReport {
  int order = 0;
  Grouping groups;
  std::vector<FreenessViolation<T>> violations;
  T max_mixed = T(0);  ///< largest |kappa| over all mixed words checked
  bool is_free() const { return violations.empty(); }
};

/// Throws StructuralError unless `groups` partitions the letters of `alphabet`.
void validate_grouping(const Alphabet& alphabet, const Grouping& groups);

/// True iff the word's letters come from at least two groups.
bool is_mixed(std::span<const Letter> word, const std::vector<int>& group_of);

/// Every mixed word of length 2..order whose cumulant exceeds `tolerance` in
/// magnitude. An empty list certifies freeness of the groups up to `order`.
template <class T>
FreenessReport<T> check_freeness(const WordFunctional<T, MomentTag>& mf, const Grouping& groups, int order,
                                 const T& tolerance) {
  validate_grouping(mf.alphabet(), groups);
  if (order > mf.order()) throw ValidationError("check_freeness: order exceeds the functional's order");
  std::vector<int> group_of(static_cast<std::size_t>(mf.letters()), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (Letter l : groups[g]) group_of[static_cast<std::size_t>(l)] = static_cast<int>(g);
  }
  FreenessReport<T> report;
  report.order = order;
  report.groups = groups;
  if (groups.size() < 2 || order < 2) return report;
  const auto cf = moments_to_cumulants(mf.truncated(order));
  for (std::size_t i = cf.layout().offset(2); i < cf.size(); ++i) {
    const Word w = cf.word_at(i);
    if (!is_mixed(w, group_of)) continue;
    const T magnitude = cf.values()[i] < T(0) ? T(-cf.values()[i]) : cf.values()[i];
    if (magnitude > report.max_mixed) report.max_mixed = magnitude;
    if (magnitude > tolerance) report.violations.push_back({w, cf.values()[i]});
  }
  return report;
}

}  // namespace fpt
