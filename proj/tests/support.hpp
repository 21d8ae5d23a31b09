#pragma once

#include "fpt/functional.hpp"
#include "fpt/models.hpp"
#include "fpt/polynomial.hpp"
#include "fpt/transform.hpp"

#include <random>

namespace fpt::testing {

/// Small signed rationals p/q with |p| <= 9, 1 <= q <= 6.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

template <class Tag>
WordFunctional<Rational, Tag> random_functional(std::mt19937& rng, int letters, int order) {
  WordFunctional<Rational, Tag> f(Alphabet::numbered("a", letters), order);
  for (std::size_t i = 1; i < f.size(); ++i) f.values()[i] = random_rational(rng);
  return f;
}

inline MomentFunctional random_moments(std::mt19937& rng, int letters, int order) {
  return random_functional<MomentTag>(rng, letters, order);
}

inline CumulantFunctional random_cumulants(std::mt19937& rng, int letters, int order) {
  return random_functional<CumulantTag>(rng, letters, order);
}

/// Tracial moment table: phi(w) depends only on the cyclic class of w.
inline MomentFunctional random_tracial_moments(std::mt19937& rng, int letters, int order) {
  MomentFunctional f(Alphabet::numbered("a", letters), order);
  for (std::size_t i = 1; i < f.size(); ++i) {
    Word w = f.word_at(i);
    Word best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    if (f.layout().index(best) == i) {
      f.values()[i] = random_rational(rng);
    } else {
      f.values()[i] = f.at(best);
    }
  }
  return f;
}

/// Cumulants of b_i = s_i a_i s_i computed without the closed formula: joint
/// cumulants of (s_1..s_k, a_1..a_k) are the semicircle covariance on pure s
/// words, the base cumulants on pure a words and zero on mixed words; moments
/// of b-words expand to 3n-letter joint words summed over NC(3n).
inline CumulantFunctional sandwich_oracle(const CovarianceMatrix& c, const MomentFunctional& base, int order) {
  const int k = c.size();
  const auto base_cf = moments_to_cumulants(base.truncated(order));
  auto joint_kappa = [&](std::span<const Letter> w) -> Rational {
    const bool all_s = std::all_of(w.begin(), w.end(), [&](Letter l) { return l < k; });
    const bool all_a = std::all_of(w.begin(), w.end(), [&](Letter l) { return l >= k; });
    if (all_s) return w.size() == 2 ? c(w[0], w[1]) : Rational(0);
    if (!all_a) return 0;
    Word sub;
    for (Letter l : w) sub.push_back(static_cast<Letter>(l - k));
    return base_cf.at(sub);
  };
  auto phi = [&](const Word& w) { return moment_of_word<Rational>(w, joint_kappa); };
  std::vector<NcPolynomial> polys;
  for (int i = 0; i < k; ++i) {
    polys.push_back(NcPolynomial::monomial(Word{static_cast<Letter>(i), static_cast<Letter>(k + i), static_cast<Letter>(i)}));
  }
  return moments_to_cumulants(pushforward(phi, polys, Alphabet::numbered("b", k), order));
}

}  // namespace fpt::testing
