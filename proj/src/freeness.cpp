#include "fpt/freeness.hpp"

#include "fpt/polynomial.hpp"

#include <set>

namespace fpt {

namespace {

Alphabet union_alphabet(const std::vector<const Alphabet*>& parts) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const Alphabet* a : parts) {
    for (const auto& n : a->names()) {
      if (!seen.insert(n).second) throw StructuralError("free_product: variable '" + n + "' appears in two families");
      names.push_back(n);
    }
  }
  return Alphabet(std::move(names));
}

}  // namespace

void validate_grouping(const Alphabet& alphabet, const Grouping& groups) {
  std::vector<int> seen(static_cast<std::size_t>(alphabet.size()), 0);
  for (const auto& g : groups) {
    for (Letter l : g) {
      if (l < 0 || l >= alphabet.size()) throw StructuralError("grouping refers to a letter outside the alphabet");
      if (seen[static_cast<std::size_t>(l)]++) throw StructuralError("grouping lists a letter twice");
    }
  }
  for (int s : seen) {
    if (s == 0) throw StructuralError("grouping does not cover the alphabet");
  }
}

bool is_mixed(std::span<const Letter> word, const std::vector<int>& group_of) {
  for (Letter l : word) {
    if (group_of[static_cast<std::size_t>(l)] != group_of[static_cast<std::size_t>(word[0])]) return true;
  }
  return false;
}

CumulantFunctional free_product_cumulants(const std::vector<CumulantFunctional>& families, int order) {
  if (families.empty()) throw ValidationError("free_product: no families");
  std::vector<const Alphabet*> parts;
  for (const auto& f : families) {
    if (order > f.order()) throw ValidationError("free_product: order exceeds a family's order");
    parts.push_back(&f.alphabet());
  }
  CumulantFunctional joint(union_alphabet(parts), order);
  std::vector<int> family_of;
  std::vector<Letter> local;
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (int l = 0; l < families[f].letters(); ++l) {
      family_of.push_back(static_cast<int>(f));
      local.push_back(l);
    }
  }
  Word sub;
  for (std::size_t i = 1; i < joint.size(); ++i) {
    const Word w = joint.word_at(i);
    if (is_mixed(w, family_of)) continue;
    sub.clear();
    for (Letter l : w) sub.push_back(local[static_cast<std::size_t>(l)]);
    joint.values()[i] = families[static_cast<std::size_t>(family_of[static_cast<std::size_t>(w[0])])].at(sub);
  }
  return joint;
}

MomentFunctional free_product(const std::vector<MomentFunctional>& families, int order) {
  std::vector<CumulantFunctional> cumulants;
  cumulants.reserve(families.size());
  for (const auto& f : families) {
    if (order > f.order()) throw ValidationError("free_product: order exceeds a family's order");
    cumulants.push_back(moments_to_cumulants(f.truncated(order)));
  }
  return cumulants_to_moments(free_product_cumulants(cumulants, order));
}

MomentFunctional free_copies_sum(const MomentFunctional& row, int copies, int order) {
  if (copies < 1) throw ValidationError("free_copies_sum: copies must be positive");
  std::vector<MomentFunctional> renamed;
  for (int c = 1; c <= copies; ++c) {
    std::vector<std::string> names;
    for (const auto& n : row.alphabet().names()) names.push_back(n + "#" + std::to_string(c));
    renamed.push_back(row.truncated(order).renamed(Alphabet(std::move(names))));
  }
  const MomentFunctional joint = free_product(renamed, order);
  std::vector<NcPolynomial> sums(static_cast<std::size_t>(row.letters()));
  for (int i = 0; i < row.letters(); ++i) {
    for (int c = 0; c < copies; ++c) sums[static_cast<std::size_t>(i)].add_term(Word{c * row.letters() + i}, 1);
  }
  return pushforward([&](const Word& w) { return joint.at(w); }, sums, row.alphabet(), order);
}

}  // namespace fpt
