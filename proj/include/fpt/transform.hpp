#pragma once

#include "fpt/functional.hpp"
#include "fpt/nc_partition.hpp"

#include <cstdint>
#include <span>

namespace fpt {

namespace detail {

template <class T>
bool is_zero(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return sgn(v) == 0;
  } else {
    return v == T(0);
  }
}

inline std::size_t subword_index(const WordLayout& layout, std::span<const Letter> word,
                                 std::span<const std::uint8_t> block) {
  std::size_t code = 0;
  for (auto pos : block) code = code * static_cast<std::size_t>(layout.letters()) + static_cast<std::size_t>(word[pos]);
  return layout.offset(static_cast<int>(block.size())) + code;
}

// Product over the blocks of partition p of table values on the block subwords.
template <class T>
T block_product(const PartitionTable& table, std::size_t p, const WordLayout& layout, std::span<const T> values,
                std::span<const Letter> word) {
  T prod = values[subword_index(layout, word, table.block(p, 0))];
  for (int b = 1, nb = table.num_blocks(p); b < nb && !is_zero(prod); ++b) {
    prod *= values[subword_index(layout, word, table.block(p, b))];
  }
  return prod;
}

template <class T, class InTag, class OutTag, bool WithMobius>
WordFunctional<T, OutTag> lattice_transform(const WordFunctional<T, InTag>& in, Execution exec) {
  WordFunctional<T, OutTag> out(in.alphabet(), in.order());
  const WordLayout& layout = in.layout();
  const std::span<const T> values = in.values();
  std::span<T> result = out.values();
  const bool parallel = exec == Execution::parallel;
  for (int n = 1; n <= in.order(); ++n) {
    const PartitionTable& table = partition_table(n, WithMobius);
    const auto first = static_cast<std::int64_t>(layout.offset(n));
    const auto last = static_cast<std::int64_t>(layout.offset(n + 1));
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t i = first; i < last; ++i) {
      const Word word = layout.word_at(static_cast<std::size_t>(i));
      T sum = 0;
      for (std::size_t p = 0; p < table.size(); ++p) {
        T term = block_product(table, p, layout, values, word);
        if (is_zero(term)) continue;
        if constexpr (WithMobius) term *= T(static_cast<long>(table.mobius_to_one[p]));
        sum += term;
      }
      result[static_cast<std::size_t>(i)] = sum;
    }
  }
  return out;
}

}  // namespace detail

/// Product over blocks V of pi of phi on the subword at V.
template <class T>
T phi_pi(const WordFunctional<T, MomentTag>& mf, std::span<const Letter> word, const NcPartition& pi) {
  if (static_cast<int>(word.size()) != pi.size()) throw StructuralError("phi_pi: word length differs from partition size");
  if (pi.size() > mf.order()) throw StructuralError("phi_pi: word longer than the functional's order");
  T prod = 1;
  for (const auto& block : pi.positions()) {
    Word sub;
    for (int pos : block) sub.push_back(word[static_cast<std::size_t>(pos)]);
    prod *= mf.at(sub);
  }
  return prod;
}

/// Product over blocks V of pi of kappa on the subword at V.
template <class T>
T kappa_pi(const WordFunctional<T, CumulantTag>& cf, std::span<const Letter> word, const NcPartition& pi) {
  if (static_cast<int>(word.size()) != pi.size()) throw StructuralError("kappa_pi: word length differs from partition size");
  if (pi.size() > cf.order()) throw StructuralError("kappa_pi: word longer than the functional's order");
  T prod = 1;
  for (const auto& block : pi.positions()) {
    Word sub;
    for (int pos : block) sub.push_back(word[static_cast<std::size_t>(pos)]);
    prod *= cf.at(sub);
    if (detail::is_zero(prod)) break;
  }
  return prod;
}

/// kappa(w) = sum over NC(n) of phi_pi(w) mu(pi, 1_n), for every word up to the order.
template <class T>
WordFunctional<T, CumulantTag> moments_to_cumulants(const WordFunctional<T, MomentTag>& mf,
                                                    Execution exec = Execution::parallel) {
  return detail::lattice_transform<T, MomentTag, CumulantTag, true>(mf, exec);
}

/// phi(w) = sum over NC(n) of kappa_pi(w), for every word up to the order.
template <class T>
WordFunctional<T, MomentTag> cumulants_to_moments(const WordFunctional<T, CumulantTag>& cf,
                                                  Execution exec = Execution::parallel) {
  return detail::lattice_transform<T, CumulantTag, MomentTag, false>(cf, exec);
}

/// Single moment from a cumulant oracle kappa(span<const Letter>) -> T, summing
/// kappa_pi over NC(|w|). Blocks are visited in order and a zero factor skips
/// the rest of the partition, which keeps sparse cumulant laws cheap at large n.
template <class T, class KappaFn>
T moment_of_word(std::span<const Letter> word, KappaFn&& kappa) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return T(1);
  const PartitionTable& table = partition_table(n, false);
  T sum = 0;
  Word sub;
  for (std::size_t p = 0; p < table.size(); ++p) {
    T prod = 1;
    for (int b = 0, nb = table.num_blocks(p); b < nb; ++b) {
      sub.clear();
      for (auto pos : table.block(p, b)) sub.push_back(word[pos]);
      prod *= kappa(std::span<const Letter>(sub));
      if (detail::is_zero(prod)) break;
    }
    if (!detail::is_zero(prod)) sum += prod;
  }
  return sum;
}

}  // namespace fpt
