#include "fpt/fock.hpp"

#include "fpt/models.hpp"
#include "fpt/transform.hpp"

#include <gtest/gtest.h>

using fpt::Rational;
using fpt::Word;

namespace {

fpt::CumulantFunctional correlated_semicircles(int order) {
  return fpt::semicircle_family(fpt::CovarianceMatrix({{2, 1}, {1, 1}}), order);
}

fpt::FockModel small_model(const fpt::CumulantFunctional& cf, int k, int d) {
  return fpt::FockModel(fpt::build_poly_space(cf, k, d), fpt::TimeBasis({0, 1, 2}), d);
}

double norm(const fpt::FockState& s) {
  double total = 0;
  for (const auto& level : s.levels) total += level.squaredNorm();
  return std::sqrt(total);
}

}  // namespace

TEST(PolySpace, DimensionIsTheGramRank) {
  EXPECT_EQ(fpt::build_poly_space(correlated_semicircles(5), 2, 2).dimension(), 2);
  EXPECT_EQ(fpt::build_poly_space(fpt::free_poisson(2, 1, 7), 1, 3).dimension(), 1);
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix::identity(2), 5));
  const auto space = fpt::build_poly_space(fpt::compound_free_poisson(2, base, 5), 2, 2);
  EXPECT_EQ(space.dimension(), 6);
  EXPECT_LT(space.orthonormality_error(), 1e-12);
}

TEST(PolySpace, RejectsNonPositiveForms) {
  const auto bern = fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 5));
  EXPECT_THROW(fpt::build_poly_space(bern, 1, 2), fpt::DomainError);
  EXPECT_THROW(fpt::build_poly_space(correlated_semicircles(4), 2, 2), fpt::ValidationError);
  EXPECT_THROW(fpt::build_poly_space(correlated_semicircles(5), 3, 2), fpt::ValidationError);
}

TEST(TimeBasis, Validation) {
  EXPECT_THROW(fpt::TimeBasis({0}), fpt::ValidationError);
  EXPECT_THROW(fpt::TimeBasis({0, 1, 1}), fpt::ValidationError);
  EXPECT_THROW(fpt::TimeBasis({-1, 1}), fpt::ValidationError);
  const fpt::TimeBasis t({2, 0, Rational(1, 2)});
  EXPECT_EQ(t.intervals(), 2);
  EXPECT_EQ(t.length(1), Rational(3, 2));
  EXPECT_NEAR(t.indicator(0, 2).squaredNorm(), 2.0, 1e-15);
  EXPECT_EQ(t.mask(Rational(1, 2), 2), Eigen::Vector2d(0, 1));
  EXPECT_THROW(t.mask(0, 1), fpt::ValidationError);
  EXPECT_THROW(t.mask(2, 0), fpt::ValidationError);
}

TEST(FockModel, Dimensions) {
  const auto model = small_model(correlated_semicircles(7), 2, 3);
  EXPECT_EQ(model.dim_h(), 2);
  EXPECT_EQ(model.dim_one_particle(), 4);
  EXPECT_EQ(model.dim_fock(), 1u + 4u + 16u + 64u);
}

TEST(FockOperators, CreationAndAnnihilation) {
  const auto model = small_model(correlated_semicircles(7), 2, 3);
  const auto x = model.one_particle(0, 0, 1);
  const auto y = model.one_particle(1, 0, 2);
  const auto omega = fpt::FockState::vacuum(model.n_max());
  EXPECT_EQ(fpt::apply(fpt::annihilation(x, model), omega, model).top_level(), -1);
  const auto once = fpt::apply(fpt::creation(x, model), omega, model);
  EXPECT_EQ(once.top_level(), 1);
  const auto back = fpt::apply(fpt::annihilation(y, model), once, model);
  ASSERT_EQ(back.top_level(), 0);
  // <y, x> = <chi_(0,2), chi_(0,1)> <X_2, X_1> = 1 * kappa(s2 s1) = 1.
  EXPECT_NEAR(back.levels[0](0), 1.0, 1e-12);
  EXPECT_NEAR(norm(once), std::sqrt(2.0), 1e-12);
}

TEST(FockOperators, AdjointMatchesTranspose) {
  const auto model = small_model(correlated_semicircles(7), 2, 3);
  auto op = fpt::creation(model.one_particle(0, 0, 1), model);
  op += fpt::annihilation(model.one_particle(1, 1, 2), model);
  op += fpt::gauge(Eigen::Matrix2d{{1, 2}, {0, 1}}, Eigen::Matrix2d{{0, 1}, {3, 0}}, model);
  op.scalar = 0.5;
  const Eigen::MatrixXd m = fpt::matrix(op, model);
  EXPECT_LT((fpt::matrix(op.adjoint(), model) - m.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(fpt::matrix(op, model, 10), fpt::CapacityError);
}

TEST(FockOperators, IncrementsAreSelfAdjoint) {
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix::identity(2), 5));
  const auto cf = fpt::compound_free_poisson(2, base, 5);
  const fpt::FockModel model(fpt::build_poly_space(cf, 2, 2), fpt::TimeBasis({0, 1, 2}), 2);
  for (int i = 0; i < 2; ++i) {
    const Eigen::MatrixXd m = fpt::matrix(fpt::levy_increment(i, 0, 1, model), model);
    EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(fpt::levy_increment(0, 1, 1, model), fpt::ValidationError);
}

TEST(LevyProcess, VacuumMomentsReproduceTheLaw) {
  const auto cf = correlated_semicircles(9);
  const auto model = fpt::build_fock_model(cf, 2, 4);
  const std::vector<fpt::FockOperator> ops{fpt::levy_process(0, 1, model), fpt::levy_process(1, 1, model)};
  const auto got = fpt::operator_moments(ops, cf.alphabet(), 4, model);
  const auto want = fpt::to_float(fpt::cumulants_to_moments(cf.truncated(4)));
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got.values()[i], want.values()[i], 1e-9) << i;
}

TEST(LevyProcess, MarginalsFormASemigroup) {
  const auto cf = fpt::free_poisson(Rational(3, 2), 1, 7);
  const auto model = fpt::build_fock_model(cf, 1, 3);
  for (const Rational t : {Rational(1, 4), Rational(2), Rational(3)}) {
    const auto moments = fpt::operator_moments({fpt::levy_process(0, t, model)}, cf.alphabet(), 3, model);
    const auto cumulants = fpt::moments_to_cumulants(moments);
    for (int n = 1; n <= 3; ++n) {
      EXPECT_NEAR(cumulants.at(Word(static_cast<std::size_t>(n), 0)), fpt::to_double(t * Rational(3, 2)), 1e-9);
    }
  }
  const auto zero = fpt::levy_process(0, 0, model);
  EXPECT_EQ(fpt::vacuum_moment({zero, zero}, model), 0.0);
}

TEST(LevyAxioms, SemicircleFamilyPasses) {
  const auto cf = correlated_semicircles(7);
  const auto report = fpt::verify_levy_axioms(fpt::build_fock_model(cf, 2, 3), cf, 3);
  EXPECT_TRUE(report.passed());
  EXPECT_THROW(fpt::verify_levy_axioms(fpt::build_fock_model(cf, 2, 3), cf, 4), fpt::CapacityError);
}
