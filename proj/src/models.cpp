#include "fpt/models.hpp"

#include "fpt/error.hpp"
#include "fpt/freeness.hpp"

#include <algorithm>

namespace fpt {

CovarianceMatrix::CovarianceMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  const std::size_t k = entries_.size();
  if (k == 0) throw ValidationError("covariance matrix is empty");
  for (const auto& row : entries_) {
    if (row.size() != k) throw ValidationError("covariance matrix is not square");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (entries_[i][j] != entries_[j][i]) throw ValidationError("covariance matrix is not symmetric");
    }
  }
  if (!is_psd(entries_).psd) throw ValidationError("covariance matrix is not positive semidefinite");
}

CovarianceMatrix CovarianceMatrix::identity(int k) {
  RationalMatrix m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return CovarianceMatrix(std::move(m));
}

void PoissonSpec::validate() const {
  if (rates.empty()) throw ValidationError("Poisson spec has no rates");
  if (rates.size() != jumps.size()) throw ValidationError("Poisson spec: rates and jumps differ in length");
  for (const auto& r : rates) {
    if (sgn(r) <= 0) throw ValidationError("Poisson spec: rates must be positive");
  }
}

Rational PoissonSpec::sup_rate() const { return *std::max_element(rates.begin(), rates.end()); }

Rational PoissonSpec::total_rate() const {
  Rational s = 0;
  for (const auto& r : rates) s += r;
  return s;
}

ProjectionModel parse_projection_model(const std::string& name) {
  if (name == "equal") return ProjectionModel::equal;
  if (name == "orthogonal") return ProjectionModel::orthogonal;
  if (name == "free") return ProjectionModel::free;
  throw ValidationError("unknown projection model '" + name + "' (expected equal, orthogonal or free)");
}

std::string to_string(ProjectionModel model) {
  switch (model) {
    case ProjectionModel::equal:
      return "equal";
    case ProjectionModel::orthogonal:
      return "orthogonal";
    case ProjectionModel::free:
      return "free";
  }
  return "?";
}

CumulantFunctional semicircle_family(const CovarianceMatrix& c, int order, const Alphabet& names) {
  if (names.size() != c.size()) throw StructuralError("semicircle_family: one name per covariance row required");
  CumulantFunctional cf(names, order);
  if (order >= 2) {
    for (int i = 0; i < c.size(); ++i) {
      for (int j = 0; j < c.size(); ++j) cf.at(Word{i, j}) = c(i, j);
    }
  }
  return cf;
}

CumulantFunctional semicircle_family(const CovarianceMatrix& c, int order) {
  return semicircle_family(c, order, Alphabet::numbered("s", c.size()));
}

CumulantFunctional semicircle(const Rational& radius, int order, const std::string& name) {
  if (sgn(radius) < 0) throw ValidationError("semicircle radius must be non-negative");
  const Rational variance = radius * radius / 4;
  return semicircle_family(CovarianceMatrix(RationalMatrix{{variance}}), order, Alphabet({name}));
}

CumulantFunctional free_poisson(const Rational& lambda, const Rational& alpha, int order, const std::string& name) {
  if (sgn(lambda) <= 0) throw ValidationError("free_poisson: lambda must be positive");
  CumulantFunctional cf(Alphabet({name}), order);
  Rational power = alpha;
  for (int n = 1; n <= order; ++n, power *= alpha) cf.at(Word(static_cast<std::size_t>(n), 0)) = lambda * power;
  return cf;
}

CumulantFunctional compound_free_poisson(const Rational& lambda, const MomentFunctional& base, int order) {
  if (sgn(lambda) <= 0) throw ValidationError("compound_free_poisson: lambda must be positive");
  if (base.order() < order) throw ValidationError("compound_free_poisson: base order below requested order");
  CumulantFunctional cf(base.alphabet(), order);
  for (std::size_t i = 1; i < cf.size(); ++i) cf.values()[i] = lambda * base.values()[i];
  return cf;
}

MomentFunctional projection_functional(const Rational& t, int order, const std::string& name) {
  if (sgn(t) < 0 || t > 1) throw ValidationError("projection trace must lie in [0, 1]");
  MomentFunctional mf(Alphabet({name}), order);
  for (std::size_t i = 1; i < mf.size(); ++i) mf.values()[i] = t;
  return mf;
}

MomentFunctional projection_moments(const std::vector<Rational>& traces, ProjectionModel model, int order) {
  const int k = static_cast<int>(traces.size());
  const Alphabet names = Alphabet::numbered("p", k);
  switch (model) {
    case ProjectionModel::equal: {
      MomentFunctional mf(names, order);
      for (std::size_t i = 1; i < mf.size(); ++i) mf.values()[i] = traces.front();
      return mf;
    }
    case ProjectionModel::orthogonal: {
      MomentFunctional mf(names, order);
      for (std::size_t i = 1; i < mf.size(); ++i) {
        const Word w = mf.word_at(i);
        if (std::all_of(w.begin(), w.end(), [&](Letter l) { return l == w[0]; })) {
          mf.values()[i] = traces[static_cast<std::size_t>(w[0])];
        }
      }
      return mf;
    }
    case ProjectionModel::free: {
      std::vector<CumulantFunctional> singles;
      for (int i = 0; i < k; ++i) {
        MomentFunctional single(Alphabet({names.name(i)}), order);
        for (std::size_t j = 1; j < single.size(); ++j) single.values()[j] = traces[static_cast<std::size_t>(i)];
        singles.push_back(moments_to_cumulants(single));
      }
      return cumulants_to_moments(free_product_cumulants(singles, order));
    }
  }
  throw ValidationError("unknown projection model");
}

MomentFunctional projection_family(const PoissonSpec& spec, ProjectionModel model, int n, int order) {
  spec.validate();
  if (n < 1 || Rational(n) < spec.sup_rate()) throw ValidationError("projection_family: N must be at least sup lambda_i");
  if (model == ProjectionModel::equal &&
      std::any_of(spec.rates.begin(), spec.rates.end(), [&](const Rational& r) { return r != spec.rates.front(); })) {
    throw ValidationError("projection_family: the equal model needs identical rates");
  }
  if (model == ProjectionModel::orthogonal && spec.total_rate() > n) {
    throw ValidationError("projection_family: orthogonal projections need sum lambda_i <= N");
  }
  std::vector<Rational> traces;
  for (const auto& r : spec.rates) traces.push_back(r / n);
  return projection_moments(traces, model, order);
}

MomentFunctional point_masses(const std::vector<Rational>& alphas, int order) {
  if (alphas.empty()) throw ValidationError("point_masses: no values");
  MomentFunctional mf(Alphabet::numbered("a", static_cast<int>(alphas.size())), order);
  for (std::size_t i = 1; i < mf.size(); ++i) {
    Rational prod = 1;
    for (Letter l : mf.word_at(i)) prod *= alphas[static_cast<std::size_t>(l)];
    mf.values()[i] = prod;
  }
  return mf;
}

MomentFunctional point_mass(const Rational& alpha, int order, const std::string& name) {
  return point_masses({alpha}, order).renamed(Alphabet({name}));
}

MomentFunctional bernoulli(const Rational& p, int order, const std::string& name) {
  if (sgn(p) < 0 || p > 1) throw ValidationError("bernoulli: p must lie in [0, 1]");
  MomentFunctional mf(Alphabet({name}), order);
  for (int n = 1; n <= order; ++n) mf.at(Word(static_cast<std::size_t>(n), 0)) = n % 2 == 0 ? Rational(1) : Rational(2 * p - 1);
  return mf;
}

CumulantFunctional sandwich_cumulants(const CovarianceMatrix& c, const MomentFunctional& base, int order) {
  if (base.order() < order) throw ValidationError("sandwich_cumulants: base order below requested order");
  if (base.letters() != c.size()) throw StructuralError("sandwich_cumulants: covariance size differs from base alphabet");
  CumulantFunctional cf(base.alphabet(), order);
  for (std::size_t i = 1; i < cf.size(); ++i) {
    const Word w = cf.word_at(i);
    Rational prod = base.values()[i];
    for (std::size_t j = 0; j < w.size() && sgn(prod) != 0; ++j) prod *= c(w[j], w[(j + 1) % w.size()]);
    cf.values()[i] = prod;
  }
  return cf;
}

}  // namespace fpt
