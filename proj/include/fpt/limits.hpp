#pragma once

#include "fpt/functional.hpp"
#include "fpt/models.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fpt {

struct ConvergenceRow {
  Word word;
  std::vector<Rational> values;  ///< one per schedule entry
  Rational target;
  std::vector<Rational> errors;  ///< |value - target|
  /// Exact expansion value(x) = sum_j coefficients[j] x^j with x = 1/parameter,
  /// when the row family admits one.
  std::vector<Rational> coefficients;
  /// sum_{j >= 1} |coefficients[j]|, so that error <= bound * x for x <= 1.
  std::optional<Rational> bound;
  /// log(err_i / err_{i+1}) / log(param_{i+1} / param_i); NaN when undefined.
  std::vector<double> exponents;
};

struct ConvergenceReport {
  std::string parameter = "N";  ///< name of the schedule variable
  Alphabet alphabet;
  int order = 0;
  std::vector<std::int64_t> schedule;
  std::vector<ConvergenceRow> rows;
  /// Every expansion's constant term matches the stated target.
  bool expansion_matches_target = true;

  /// Largest error over words at schedule position i, optionally restricted to one word length.
  Rational max_error(std::size_t i, int length = 0) const;
  /// Every row satisfies error <= bound / parameter at every schedule point.
  bool within_bounds() const;
};

/// Cumulants of the row sum over N free identically distributed copies of `row`: N * kappa(row).
CumulantFunctional array_cumulants(const MomentFunctional& row, std::int64_t n, int order);

/// Moments of the tensor row a_i (x) p^(i): phi_base(w) * psi(w) word by word.
MomentFunctional tensor_row(const MomentFunctional& base, const MomentFunctional& psi);

/// Row a = alpha p with phi(p) = lambda / N against the target kappa_m = lambda alpha^m.
/// Throws ValidationError unless the spec has one index and every N >= lambda.
ConvergenceReport poisson_limit_check(const PoissonSpec& spec, const std::vector<std::int64_t>& schedule, int order);

/// Rows alpha_i p^(i) under a projection model against the closed-form limit.
ConvergenceReport multi_poisson_limit_check(const PoissonSpec& spec, ProjectionModel model,
                                            const std::vector<std::int64_t>& schedule, int order);

/// Tensor rows a_i (x) p^(i) against phi_base(w) * lim N psi(p-word). The spec's
/// jumps are ignored; the base carries the jump distribution.
ConvergenceReport compound_limit_check(const MomentFunctional& base, const PoissonSpec& spec, ProjectionModel model,
                                       const std::vector<std::int64_t>& schedule, int order);

/// lim N psi_N(p-word) for the canonical projection models.
Rational projection_limit(const PoissonSpec& spec, ProjectionModel model, std::span<const Letter> word);

/// kappa -> t kappa. Throws ValidationError if t < 0.
CumulantFunctional dilate(const CumulantFunctional& cf, const Rational& t);

struct Approximation {
  std::int64_t j = 1;
  CumulantFunctional cumulants;
  std::vector<Rational> errors;  ///< |kappa_approx - kappa_target| in layout order
};

/// Compound free Poisson law of rate j over the formal moments of dilate(target, 1/j).
Approximation poisson_approximation(const CumulantFunctional& target, std::int64_t j, int order);

/// Word-wise errors of kappa along `sequence` against `target`. `labels`
/// defaults to 1, 2, ... Throws StructuralError on an alphabet mismatch.
ConvergenceReport sequence_limit_check(const std::vector<CumulantFunctional>& sequence, const CumulantFunctional& target,
                                       int order, std::vector<std::int64_t> labels = {});

/// poisson_approximation along the schedule of j, with the exact expansion in 1/j per word.
ConvergenceReport approximation_report(const CumulantFunctional& target, const std::vector<std::int64_t>& schedule,
                                       int order);

/// Coefficients c_0..c_{order-1} per layout index such that f(x)[w] = sum c_j x^j,
/// assuming each entry is a polynomial of degree < order in x. Found by exact
/// interpolation at x = 1, 1/2, ..., 1/order.
std::vector<std::vector<Rational>> expansion_in_inverse(
    const std::function<CumulantFunctional(const Rational&)>& family, int order);

}  // namespace fpt
