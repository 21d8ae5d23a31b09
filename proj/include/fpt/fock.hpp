#pragma once

#include "fpt/functional.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace fpt {

/// The pre-Hilbert space of polynomials without constant term under
/// <X_w, X_v> = kappa(w . reverse v), truncated at degree d_H, with the kernel divided out.
struct PolySpace {
  int variables = 0;
  int degree = 0;
  std::vector<Word> index;  ///< monomials in Gram index order
  Eigen::MatrixXd gram;
  /// Column b holds the monomial coefficients of the b-th orthonormal vector.
  Eigen::MatrixXd basis;
  /// Compressed left multiplication by X_i in the orthonormal basis.
  std::vector<Eigen::MatrixXd> multiplication;
  /// X_i in the orthonormal basis.
  std::vector<Eigen::VectorXd> generators;
  /// kappa_1(a_i).
  std::vector<double> means;

  int dimension() const { return static_cast<int>(basis.cols()); }
  /// max |E^T G E - I|.
  double orthonormality_error() const;
};

/// Throws ValidationError if cf.order() < 2 d_H + 1 or k is out of range, and
/// DomainError carrying the witness polynomial if the exact Gram form at
/// degree d_H is not positive semidefinite.
PolySpace build_poly_space(const CumulantFunctional& cf, int k, int d_H, double rank_tolerance = 1e-10);

/// Normalized indicators of the elementary intervals between sorted breakpoints.
class TimeBasis {
 public:
  TimeBasis() = default;
  /// Throws ValidationError unless the breakpoints are distinct, >= 0 and at least two.
  explicit TimeBasis(std::vector<Rational> breakpoints);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  int intervals() const { return static_cast<int>(breakpoints_.size()) - 1; }
  Rational length(int m) const { return breakpoints_[static_cast<std::size_t>(m) + 1] - breakpoints_[static_cast<std::size_t>(m)]; }

  /// 0/1 diagonal of multiplication by chi_(s,t). Throws ValidationError unless
  /// s < t are both breakpoints.
  Eigen::VectorXd mask(const Rational& s, const Rational& t) const;
  /// chi_(s,t) in the normalized basis: sqrt(length) on covered intervals.
  Eigen::VectorXd indicator(const Rational& s, const Rational& t) const;

 private:
  std::vector<Rational> breakpoints_;
};

/// Breakpoints needed by verify_levy_axioms: 0, 1/8, 1/4, 1/2, 1, 2, 3.
std::vector<Rational> levy_breakpoints();

/// Truncated full Fock space over (time basis) (x) (PolySpace), one-particle index time * dim_H + a.
class FockModel {
 public:
  FockModel(PolySpace poly, TimeBasis time, int n_max);

  const PolySpace& poly() const { return poly_; }
  const TimeBasis& time() const { return time_; }
  int n_max() const { return n_max_; }
  int dim_h() const { return poly_.dimension(); }
  int dim_one_particle() const { return time_.intervals() * dim_h(); }
  /// 1 + sum_{m=1..n_max} D^m; saturates at UINT64_MAX.
  std::uint64_t dim_fock() const;

  /// chi_(s,t) (x) X_i.
  Eigen::VectorXd one_particle(int variable, const Rational& s, const Rational& t) const;

 private:
  PolySpace poly_;
  TimeBasis time_;
  int n_max_;
};

/// Builds the poly space from cf and the model with d_H = n_max = order.
FockModel build_fock_model(const CumulantFunctional& cf, int k, int order,
                           std::vector<Rational> breakpoints = levy_breakpoints());

/// Particle-graded vector; levels[m] has D^m entries, or is empty when zero.
struct FockState {
  std::vector<Eigen::VectorXd> levels;
  static FockState vacuum(int n_max);
  int top_level() const;  ///< highest non-empty level, -1 if zero
};

/// scalar + sum l*(x) + sum l(y) + sum p(A), applied matrix-free.
struct FockOperator {
  double scalar = 0;
  std::vector<Eigen::VectorXd> creations;
  std::vector<Eigen::VectorXd> annihilations;
  std::vector<Eigen::MatrixXd> gauges;

  FockOperator& operator+=(const FockOperator& other);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  FockOperator& operator*=(double c);
  /// Structural adjoint: creations and annihilations swap, gauges transpose.
  FockOperator adjoint() const;
};

FockOperator creation(const Eigen::VectorXd& x, const FockModel& model);
FockOperator annihilation(const Eigen::VectorXd& x, const FockModel& model);
/// p(T_time (x) T_poly).
FockOperator gauge(const Eigen::MatrixXd& t_time, const Eigen::MatrixXd& t_poly, const FockModel& model);

/// (t - s) kappa_1 + l(x) + l*(x) + p(chi_(s,t) (x) lambda(X_i)) with x = chi_(s,t) (x) X_i.
/// Throws ValidationError unless s < t.
FockOperator levy_increment(int variable, const Rational& s, const Rational& t, const FockModel& model);

/// a_t = a_{0,t}, with a_0 the zero operator.
FockOperator levy_process(int variable, const Rational& t, const FockModel& model);

/// Components beyond n_max (or beyond `max_level` if smaller) are dropped.
FockState apply(const FockOperator& op, const FockState& state, const FockModel& model, int max_level = -1);

/// <op_1 ... op_n Omega, Omega>; operators act right to left, and levels that
/// cannot return to the vacuum within the remaining factors are pruned.
double vacuum_moment(const std::vector<const FockOperator*>& ops, const FockModel& model);
double vacuum_moment(const std::vector<FockOperator>& ops, const FockModel& model);

/// Dense matrix over the Fock basis (levels stacked, vacuum first). Throws
/// CapacityError above `max_dimension`.
Eigen::MatrixXd matrix(const FockOperator& op, const FockModel& model, std::size_t max_dimension = 4096);

/// Moments of the operator family ops (one letter each) up to `order`.
FloatMoments operator_moments(const std::vector<FockOperator>& ops, const Alphabet& names, int order,
                              const FockModel& model);

struct LevySection {
  std::string name;
  double max_error = 0;
  double tolerance = 0;
  bool passed = true;
  std::string detail;
};

struct LevyReport {
  int order = 0;
  LevySection reproduction;  ///< vacuum moments of a_{0,1} vs the defining functional
  LevySection freeness;      ///< increments on (0,1) and (1,2)
  LevySection stationarity;  ///< a_{0,1} vs a_{2,3}
  LevySection vanishing;     ///< a_0 = 0 and a_{0,1} = a_{0,1/2} + a_{1/2,1}
  LevySection continuity;    ///< a_{0,t} -> 0 with kappa(a_{0,t}) = t kappa
  bool passed() const {
    return reproduction.passed && freeness.passed && stationarity.passed && vanishing.passed && continuity.passed;
  }
};

struct LevyTolerances {
  double reproduction = 1e-9;
  double freeness = 1e-9;
  double stationarity = 1e-12;
  double vanishing = 1e-12;
  double continuity = 1e-9;
};

/// Checks the four process axioms on the model up to `order`, against the
/// defining cumulants cf. Throws CapacityError if n_max or d_H is below
/// `order`, ValidationError if the model lacks the breakpoints of levy_breakpoints().
LevyReport verify_levy_axioms(const FockModel& model, const CumulantFunctional& cf, int order,
                              const LevyTolerances& tolerances = {});

}  // namespace fpt
