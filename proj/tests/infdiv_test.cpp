#include "fpt/infdiv.hpp"

#include "fpt/limits.hpp"
#include "fpt/models.hpp"
#include "fpt/transform.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using fpt::Rational;
using fpt::RationalMatrix;
using fpt::Word;

TEST(GramIndex, DegreeThenLexicographic) {
  const auto index = fpt::gram_index(2, 2);
  const std::vector<Word> expected{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(index, expected);
  EXPECT_EQ(fpt::gram_index(3, 3).size(), 3u + 9u + 27u);
}

TEST(GramMatrix, StandardSemicircle) {
  const auto g = fpt::gram_matrix(fpt::semicircle(2, 4), 1, 2);
  EXPECT_EQ(g.entries, (RationalMatrix{{1, 0}, {0, 0}}));
}

TEST(GramMatrix, FreePoissonIsRankOne) {
  const Rational lambda(3, 2), alpha(-2);
  const auto g = fpt::gram_matrix(fpt::free_poisson(lambda, alpha, 4), 1, 2);
  EXPECT_EQ(g.entries, (RationalMatrix{{lambda * 4, lambda * -8}, {lambda * -8, lambda * 16}}));
  const auto r = fpt::is_psd(g.entries);
  EXPECT_TRUE(r.psd);
  EXPECT_EQ(r.rank, 1);
}

TEST(GramMatrix, SymmetricBernoulli) {
  const auto cf = fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 4));
  EXPECT_EQ(fpt::gram_matrix(cf, 1, 2).entries, (RationalMatrix{{1, 0}, {0, -1}}));
}

TEST(GramMatrix, EntriesUseReversedRightWord) {
  std::mt19937 rng(3);
  const auto cf = fpt::testing::random_cumulants(rng, 2, 4);
  const auto g = fpt::gram_matrix(cf, 2, 2);
  for (std::size_t r = 0; r < g.dimension(); ++r) {
    for (std::size_t c = 0; c < g.dimension(); ++c) {
      ASSERT_EQ(g.entries[r][c], cf.at(fpt::concat(g.index[r], fpt::reversed(g.index[c]))));
    }
  }
  EXPECT_EQ(fpt::gram_matrix(cf, 2, 2, fpt::Execution::serial).entries, g.entries);
}

TEST(GramMatrix, InsufficientOrder) {
  EXPECT_THROW(fpt::gram_matrix(fpt::semicircle(2, 3), 1, 2), fpt::ValidationError);
  EXPECT_THROW(fpt::gram_matrix(fpt::semicircle(2, 4), 2, 2), fpt::ValidationError);
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(fpt::is_psd({{1, 0}, {0, 0}}).psd);
  const auto r = fpt::is_psd({{1, 0}, {0, -1}});
  ASSERT_FALSE(r.psd);
  EXPECT_EQ(r.witness, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(r.witness_value, -1);
  EXPECT_THROW(fpt::is_psd({{1, 2}, {0, 1}}), fpt::ValidationError);
  EXPECT_THROW(fpt::is_psd({{1, 2}}), fpt::ValidationError);
}

TEST(IsPsd, ZeroPivotWithCoupling) {
  // [[0,1],[1,0]] has a zero first pivot but is indefinite.
  const RationalMatrix g{{0, 1}, {1, 0}};
  const auto r = fpt::is_psd(g);
  ASSERT_FALSE(r.psd);
  EXPECT_LT(fpt::quadratic_form(g, r.witness), 0);
  EXPECT_EQ(fpt::quadratic_form(g, r.witness), r.witness_value);
}

TEST(IsPsd, RandomMatricesAgreeWithWitnesses) {
  std::mt19937 rng(17);
  int positive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    // B B^T + shift: PSD when the shift is nonnegative.
    RationalMatrix b(n, std::vector<Rational>(n));
    for (auto& row : b)
      for (auto& x : row) x = fpt::testing::random_rational(rng);
    const Rational shift(static_cast<long>(trial % 3) - 1);
    RationalMatrix g(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k + 1 < n; ++k) g[i][j] += b[i][k] * b[j][k];
      }
      g[i][i] += shift;
    }
    const auto r = fpt::is_psd(g);
    if (r.psd) {
      ++positive;
      for (const auto& p : r.pivots) ASSERT_GE(p, 0);
      ASSERT_LE(r.rank, static_cast<int>(n));
    } else {
      ASSERT_LT(fpt::quadratic_form(g, r.witness), 0);
    }
    if (shift >= 0) ASSERT_TRUE(r.psd);
    if (shift < 0) ASSERT_FALSE(r.psd);  // rank-deficient B B^T minus identity
  }
  EXPECT_GT(positive, 0);
}

TEST(CheckInfdiv, Verdicts) {
  EXPECT_TRUE(fpt::check_infdiv(fpt::semicircle_family(fpt::CovarianceMatrix({{2, 1}, {1, 1}}), 6), 2, 3).pass);
  const auto bern = fpt::check_infdiv(fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 4)), 1, 2);
  ASSERT_FALSE(bern.pass);
  EXPECT_EQ(bern.witness_polynomial, fpt::NcPolynomial::monomial({0, 0}));
  EXPECT_EQ(bern.witness_value, -1);
}

TEST(CheckInfdiv, CompoundPoissonOverAState) {
  // Base: two free semicircles, a genuine state, so its moment Gram is PSD.
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix({{2, 1}, {1, 1}}), 6));
  const auto cf = fpt::compound_free_poisson(3, base, 6);
  const auto report = fpt::check_infdiv(cf, 2, 3);
  EXPECT_TRUE(report.pass);
  const auto g = fpt::gram_matrix(cf, 2, 3);
  const auto mg = fpt::moment_gram_matrix(base, 2, 3);
  for (std::size_t r = 0; r < g.dimension(); ++r) {
    for (std::size_t c = 0; c < g.dimension(); ++c) ASSERT_EQ(g.entries[r][c], 3 * mg.entries[r][c]);
  }
}

TEST(CheckInfdiv, DilationPreservesVerdict) {
  const auto cf = fpt::free_poisson(2, 1, 6);
  for (const Rational t : {Rational(0), Rational(1, 3), Rational(5)}) {
    EXPECT_TRUE(fpt::check_infdiv(fpt::dilate(cf, t), 1, 3).pass);
  }
  const auto bern = fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 4));
  EXPECT_FALSE(fpt::check_infdiv(fpt::dilate(bern, Rational(1, 7)), 1, 2).pass);
}

TEST(KappaChecks, TracialLawPasses) {
  std::mt19937 rng(23);
  const auto mf = fpt::testing::random_tracial_moments(rng, 2, 5);
  const auto checks = fpt::kappa_functional_checks(fpt::moments_to_cumulants(mf), mf, 5);
  EXPECT_TRUE(checks.tracial_precondition);
  EXPECT_TRUE(checks.trace_violations.empty());
}

TEST(KappaChecks, NonTracialLawIsFlagged) {
  fpt::MomentFunctional mf(fpt::Alphabet({"a1", "a2"}), 3);
  mf.at({0, 1}) = 1;
  mf.at({1, 0}) = 2;
  mf.at({0, 1, 1}) = 1;
  const auto checks = fpt::kappa_functional_checks(fpt::moments_to_cumulants(mf), mf, 3);
  EXPECT_FALSE(checks.tracial_precondition);
  EXPECT_FALSE(checks.moment_trace_violations.empty());
  EXPECT_FALSE(checks.passed());
}
