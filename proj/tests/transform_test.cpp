#include "fpt/transform.hpp"

#include "fpt/models.hpp"
#include "fpt/reference.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using fpt::Rational;
using fpt::Word;

namespace {

fpt::MomentFunctional single(std::vector<Rational> moments) {
  fpt::MomentFunctional mf(fpt::Alphabet({"a"}), static_cast<int>(moments.size()));
  for (std::size_t n = 1; n <= moments.size(); ++n) mf.at(Word(n, 0)) = moments[n - 1];
  return mf;
}

fpt::CumulantFunctional single_cumulants(std::vector<Rational> cumulants) {
  fpt::CumulantFunctional cf(fpt::Alphabet({"a"}), static_cast<int>(cumulants.size()));
  for (std::size_t n = 1; n <= cumulants.size(); ++n) cf.at(Word(n, 0)) = cumulants[n - 1];
  return cf;
}

}  // namespace

TEST(PhiPi, BlockProducts) {
  std::mt19937 rng(11);
  const auto mf = fpt::testing::random_moments(rng, 2, 4);
  const Word w{0, 1, 1, 0};
  EXPECT_EQ(fpt::phi_pi(mf, w, fpt::NcPartition::one(4)), mf.at(w));
  EXPECT_EQ(fpt::phi_pi(mf, w, fpt::NcPartition::zero(4)),
            mf.at({0}) * mf.at({1}) * mf.at({1}) * mf.at({0}));
  EXPECT_EQ(fpt::phi_pi(mf, w, fpt::NcPartition::from_blocks(4, {{1, 4}, {2, 3}})), mf.at({0, 0}) * mf.at({1, 1}));
  EXPECT_THROW(fpt::phi_pi(mf, w, fpt::NcPartition::one(3)), fpt::StructuralError);
}

TEST(KappaPi, BlockProducts) {
  std::mt19937 rng(12);
  const auto cf = fpt::testing::random_cumulants(rng, 1, 3);
  const Word w{0, 0, 0};
  EXPECT_EQ(fpt::kappa_pi(cf, w, fpt::NcPartition::one(3)), cf.at(w));
  EXPECT_EQ(fpt::kappa_pi(cf, w, fpt::NcPartition::from_blocks(3, {{1, 3}, {2}})), cf.at({0, 0}) * cf.at({0}));
  auto zeroed = cf;
  zeroed.at({0}) = 0;
  EXPECT_EQ(fpt::kappa_pi(zeroed, w, fpt::NcPartition::from_blocks(3, {{1, 3}, {2}})), 0);
  EXPECT_THROW(fpt::kappa_pi(cf, Word{0, 0}, fpt::NcPartition::one(3)), fpt::StructuralError);
}

TEST(MomentsToCumulants, LowOrderFormulas) {
  const auto cf = fpt::moments_to_cumulants(single({Rational(3, 2), Rational(7, 3)}));
  EXPECT_EQ(cf.at({0}), Rational(3, 2));
  EXPECT_EQ(cf.at({0, 0}), Rational(7, 3) - Rational(9, 4));
}

TEST(MomentsToCumulants, StandardSemicircle) {
  const auto cf = fpt::moments_to_cumulants(single({0, 1, 0, 2, 0, 5}));
  const std::vector<Rational> expected{0, 1, 0, 0, 0, 0};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(cf.at(Word(static_cast<std::size_t>(n), 0)), expected[n - 1]) << n;
}

TEST(CumulantsToMoments, FreePoissonGivesCatalan) {
  const auto mf = fpt::cumulants_to_moments(single_cumulants({1, 1, 1, 1}));
  EXPECT_EQ(mf.at({0}), 1);
  EXPECT_EQ(mf.at({0, 0}), 2);
  EXPECT_EQ(mf.at({0, 0, 0}), 5);
  EXPECT_EQ(mf.at({0, 0, 0, 0}), 14);
}

TEST(CumulantsToMoments, SemicircleGivesCatalanOnEvenMoments) {
  const auto mf = fpt::cumulants_to_moments(single_cumulants({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  for (int n = 1; n <= 10; ++n) {
    const Rational expected = n % 2 == 1 ? Rational(0) : Rational(static_cast<long>(fpt::catalan(n / 2)));
    EXPECT_EQ(mf.at(Word(static_cast<std::size_t>(n), 0)), expected) << n;
  }
}

TEST(CumulantsToMoments, ZeroCumulantsGiveZeroMoments) {
  const fpt::CumulantFunctional cf(fpt::Alphabet::numbered("a", 2), 5);
  const auto mf = fpt::cumulants_to_moments(cf);
  EXPECT_EQ(mf.values()[0], 1);
  for (std::size_t i = 1; i < mf.size(); ++i) EXPECT_EQ(mf.values()[i], 0);
}

TEST(Transforms, RandomRoundtrip) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    // Orders cycle through 1..8; the acceptance run repeats this at order 8 throughout.
    const auto mf = fpt::testing::random_moments(rng, 2, 1 + trial % 8);
    ASSERT_EQ(fpt::cumulants_to_moments(fpt::moments_to_cumulants(mf)), mf) << trial;
  }
}

TEST(Transforms, FirstCumulantIsTheMean) {
  std::mt19937 rng(5);
  const auto mf = fpt::testing::random_moments(rng, 3, 4);
  const auto cf = fpt::moments_to_cumulants(mf);
  for (fpt::Letter l = 0; l < 3; ++l) EXPECT_EQ(cf.at({l}), mf.at({l}));
}

TEST(Transforms, ScalingIsMultilinear) {
  std::mt19937 rng(99);
  const Rational c(-3, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto mf = fpt::testing::random_moments(rng, 2, 6);
    auto scaled = mf;
    for (std::size_t i = 1; i < mf.size(); ++i) {
      const auto len = static_cast<unsigned long>(mf.layout().length_at(i));
      scaled.values()[i] = mf.values()[i] * fpt::pow(c, len);
    }
    const auto cf = fpt::moments_to_cumulants(mf);
    const auto scf = fpt::moments_to_cumulants(scaled);
    for (std::size_t i = 1; i < cf.size(); ++i) {
      const auto len = static_cast<unsigned long>(cf.layout().length_at(i));
      ASSERT_EQ(scf.values()[i], cf.values()[i] * fpt::pow(c, len));
    }
  }
}

TEST(Transforms, ConstantCumulantsSumLambdaToTheBlockCount) {
  for (const Rational lambda : {Rational(1), Rational(2), Rational(1, 2)}) {
    const auto mf = fpt::cumulants_to_moments(fpt::free_poisson(lambda, 1, 8));
    for (int n = 1; n <= 8; ++n) {
      Rational expected = 0;
      for (const auto& p : fpt::enumerate_nc(n)) expected += fpt::pow(lambda, static_cast<unsigned long>(p.num_blocks()));
      EXPECT_EQ(mf.at(Word(static_cast<std::size_t>(n), 0)), expected) << lambda << " " << n;
    }
  }
}

TEST(Transforms, AgreeWithReferenceImplementation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto mf = fpt::testing::random_moments(rng, 2, 6);
    EXPECT_EQ(fpt::moments_to_cumulants(mf), fpt::reference::moments_to_cumulants(mf));
    const auto cf = fpt::testing::random_cumulants(rng, 3, 5);
    const auto fast = fpt::cumulants_to_moments(cf);
    EXPECT_EQ(fast, fpt::reference::cumulants_to_moments(cf));
    for (std::size_t i = 1; i < cf.size(); i += 7) {
      const Word w = cf.word_at(i);
      EXPECT_EQ(fast.values()[i], fpt::reference::moment_by_first_block(cf, w));
    }
  }
}

TEST(Transforms, SerialAndParallelAgree) {
  std::mt19937 rng(8);
  const auto mf = fpt::testing::random_moments(rng, 2, 7);
  EXPECT_EQ(fpt::moments_to_cumulants(mf, fpt::Execution::serial), fpt::moments_to_cumulants(mf, fpt::Execution::parallel));
  const auto fm = fpt::to_float(mf);
  const auto a = fpt::moments_to_cumulants(fm, fpt::Execution::serial);
  const auto b = fpt::moments_to_cumulants(fm, fpt::Execution::parallel);
  EXPECT_EQ(a, b);
}

TEST(MomentOfWord, MatchesTableTransform) {
  std::mt19937 rng(21);
  const auto cf = fpt::testing::random_cumulants(rng, 2, 6);
  const auto mf = fpt::cumulants_to_moments(cf);
  for (std::size_t i = 0; i < cf.size(); i += 5) {
    const Word w = cf.word_at(i);
    const auto value = fpt::moment_of_word<Rational>(w, [&](std::span<const fpt::Letter> sub) { return cf[sub]; });
    ASSERT_EQ(value, mf.values()[i]);
  }
}
