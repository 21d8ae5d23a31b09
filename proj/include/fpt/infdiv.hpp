#pragma once

#include "fpt/functional.hpp"
#include "fpt/nc_partition.hpp"
#include "fpt/polynomial.hpp"

#include <string>
#include <vector>

namespace fpt {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// The form <X_w, X_v> = kappa(w . reverse(v)) on monomials of degree 1..d
/// over the first k letters, index ordered by degree then lexicographically.
struct GramMatrix {
  int variables = 0;
  int degree = 0;
  std::vector<Word> index;
  RationalMatrix entries;

  std::size_t dimension() const { return index.size(); }
};

/// Monomials of degree 1..d over k letters in Gram index order.
std::vector<Word> gram_index(int k, int d);

/// Throws ValidationError if cf.order() < 2d or k exceeds the alphabet.
GramMatrix gram_matrix(const CumulantFunctional& cf, int k, int d, Execution exec = Execution::parallel);

/// Moment version of the same form, phi(w . reverse(v)).
GramMatrix moment_gram_matrix(const MomentFunctional& mf, int k, int d);

struct PsdResult {
  bool psd = true;
  int rank = 0;
  std::vector<Rational> pivots;   ///< diagonal of the LDL^T factor, in index order
  std::vector<Rational> witness;  ///< empty when psd
  Rational witness_value = 0;     ///< witness^T G witness (< -tolerance)
};

/// Symmetric elimination in index order; a pivot below -tolerance, or a
/// (near-)zero pivot with a row entry beyond tolerance, stops with a vector v
/// such that v^T G v < -tolerance. Throws ValidationError if G is not square
/// or not symmetric within tolerance.
PsdResult is_psd(const RationalMatrix& g, const Rational& tolerance = 0);

Rational quadratic_form(const RationalMatrix& g, const std::vector<Rational>& v);

struct InfDivReport {
  int variables = 0;
  int degree = 0;
  std::size_t dimension = 0;
  bool pass = false;
  int rank = 0;
  std::vector<Rational> pivots;
  std::vector<Rational> witness;  ///< coefficients over the Gram index
  NcPolynomial witness_polynomial;
  Rational witness_value = 0;
  std::vector<Word> index;
  std::string note;
};

/// PASS: the form is positive semidefinite up to degree d, which is consistent
/// with free infinite divisibility but does not prove it. FAIL: the witness
/// polynomial P has <P, P> < 0, which rules infinite divisibility out.
InfDivReport check_infdiv(const CumulantFunctional& cf, int k, int d, const Rational& tolerance = 0);

struct KappaChecks {
  int order = 0;
  bool tracial_precondition = true;               ///< phi cyclic up to `order`
  std::vector<Word> moment_trace_violations;      ///< words where phi(rotated) != phi
  std::vector<std::pair<Word, Word>> trace_violations;  ///< (u, v) with kappa(uv) != kappa(vu)
  std::vector<Word> reversal_violations;          ///< kappa(w) != kappa(reverse w)
  bool passed() const { return trace_violations.empty() && reversal_violations.empty(); }
};

/// Traciality and reversal symmetry of the kappa functional up to order d.
/// A non-tracial phi is reported as a failed precondition; the checks still run.
KappaChecks kappa_functional_checks(const CumulantFunctional& cf, const MomentFunctional& mf, int d);

}  // namespace fpt
