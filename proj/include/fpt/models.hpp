#pragma once

#include "fpt/functional.hpp"
#include "fpt/infdiv.hpp"

#include <string>
#include <vector>

namespace fpt {

/// Symmetric, positive semidefinite covariance c_ij of a semicircle family.
class CovarianceMatrix {
 public:
  CovarianceMatrix() = default;
  /// Throws ValidationError if not square, not symmetric, or not PSD.
  explicit CovarianceMatrix(RationalMatrix entries);

  static CovarianceMatrix identity(int k);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const RationalMatrix& entries() const { return entries_; }

 private:
  RationalMatrix entries_;
};

/// Rates lambda_i > 0 and real jumps alpha_i of a (multidimensional) free Poisson law.
struct PoissonSpec {
  std::vector<Rational> rates;
  std::vector<Rational> jumps;

  /// Throws ValidationError on empty or mismatched lists or a non-positive rate.
  void validate() const;
  int size() const { return static_cast<int>(rates.size()); }
  /// sup of the rates; finite because the list is.
  Rational sup_rate() const;
  Rational total_rate() const;
};

enum class ProjectionModel { equal, orthogonal, free };

ProjectionModel parse_projection_model(const std::string& name);
std::string to_string(ProjectionModel model);

/// kappa(w) = c_{w1 w2} on words of length 2, zero elsewhere.
CumulantFunctional semicircle_family(const CovarianceMatrix& c, int order, const Alphabet& names);
CumulantFunctional semicircle_family(const CovarianceMatrix& c, int order);

/// Single semicircle element of radius r: kappa_2 = r^2/4.
CumulantFunctional semicircle(const Rational& radius, int order, const std::string& name = "s");

/// kappa_n = lambda alpha^n. Throws ValidationError unless lambda > 0.
CumulantFunctional free_poisson(const Rational& lambda, const Rational& alpha, int order,
                                const std::string& name = "p");

/// kappa(w) = lambda phi_base(w), on the base's alphabet.
CumulantFunctional compound_free_poisson(const Rational& lambda, const MomentFunctional& base, int order);

/// phi(p^n) = t for all n >= 1. Throws ValidationError unless 0 <= t <= 1.
MomentFunctional projection_functional(const Rational& t, int order, const std::string& name = "p");

/// Joint law of projections p^(i) with traces lambda_i / N under one of the
/// three canonical joint models. Throws ValidationError if N < sup lambda_i,
/// if the equal model gets unequal rates, or if the orthogonal model has
/// sum lambda_i > N.
MomentFunctional projection_family(const PoissonSpec& spec, ProjectionModel model, int n, int order);

/// Same joint models with the traces given directly and no realizability
/// checks. Moments are polynomials in the traces, so this also serves formal
/// evaluation at small N.
MomentFunctional projection_moments(const std::vector<Rational>& traces, ProjectionModel model, int order);

/// Commuting point masses: phi(w) = prod alpha_{w_j}.
MomentFunctional point_masses(const std::vector<Rational>& alphas, int order);
MomentFunctional point_mass(const Rational& alpha, int order, const std::string& name = "a");

/// Two-point law with mass p at +1 and 1 - p at -1; p = 1/2 is the symmetric Bernoulli.
MomentFunctional bernoulli(const Rational& p, int order, const std::string& name = "b");

/// Cumulants of b_i = s_i a_i s_i with {s_i} a semicircle family of covariance c
/// free from {a_i}: kappa(w) = (cyclic product of c_{w_j w_{j+1}}) phi_base(w).
CumulantFunctional sandwich_cumulants(const CovarianceMatrix& c, const MomentFunctional& base, int order);

}  // namespace fpt
