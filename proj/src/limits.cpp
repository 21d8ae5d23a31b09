#include "fpt/limits.hpp"

#include "fpt/error.hpp"
#include "fpt/transform.hpp"

#include <cmath>
#include <limits>

namespace fpt {

namespace {

using Family = std::function<CumulantFunctional(const Rational&)>;

RationalMatrix inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw DomainError("singular interpolation system");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

CumulantFunctional divided(CumulantFunctional cf, const Rational& x) {
  for (auto& v : cf.values()) v /= x;
  return cf;
}

MomentFunctional scaled_letters(const MomentFunctional& mf, const std::vector<Rational>& alphas) {
  MomentFunctional out = mf;
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (Letter l : out.word_at(i)) out.values()[i] *= alphas[static_cast<std::size_t>(l)];
  }
  return out;
}

std::vector<Rational> scaled_traces(const PoissonSpec& spec, const Rational& x) {
  std::vector<Rational> traces;
  for (const auto& r : spec.rates) traces.push_back(r * x);
  return traces;
}

void validate_schedule(const std::vector<std::int64_t>& schedule) {
  for (auto n : schedule) {
    if (n < 1) throw ValidationError("schedule entries must be positive integers");
  }
}

ConvergenceReport build_report(std::string parameter, const std::vector<std::int64_t>& schedule, int order,
                               const Family& family, const CumulantFunctional& target, bool expand) {
  validate_schedule(schedule);
  ConvergenceReport report;
  report.parameter = std::move(parameter);
  report.alphabet = target.alphabet();
  report.order = order;
  report.schedule = schedule;
  std::vector<CumulantFunctional> at;
  for (auto n : schedule) at.push_back(family(Rational(1, n)));
  std::vector<std::vector<Rational>> coefficients;
  if (expand) coefficients = expansion_in_inverse(family, order);
  const WordLayout layout(target.letters(), order);
  for (std::size_t i = 1; i < layout.size(); ++i) {
    ConvergenceRow row;
    row.word = layout.word_at(i);
    row.target = target.at(row.word);
    for (const auto& cf : at) {
      row.values.push_back(cf.values()[i]);
      row.errors.push_back(abs(cf.values()[i] - row.target));
    }
    if (expand) {
      row.coefficients = coefficients[i];
      Rational bound = 0;
      for (std::size_t j = 1; j < row.coefficients.size(); ++j) bound += abs(row.coefficients[j]);
      row.bound = bound;
      if (row.coefficients.empty() ? sgn(row.target) != 0 : row.coefficients[0] != row.target) {
        report.expansion_matches_target = false;
      }
    }
    for (std::size_t s = 0; s + 1 < schedule.size(); ++s) {
      const auto& a = row.errors[s];
      const auto& b = row.errors[s + 1];
      if (sgn(a) == 0 || sgn(b) == 0) {
        row.exponents.push_back(std::numeric_limits<double>::quiet_NaN());
      } else {
        row.exponents.push_back(std::log(to_double(a / b)) /
                                std::log(static_cast<double>(schedule[s + 1]) / static_cast<double>(schedule[s])));
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

Rational ConvergenceReport::max_error(std::size_t i, int length) const {
  Rational m = 0;
  for (const auto& row : rows) {
    if (length > 0 && static_cast<int>(row.word.size()) != length) continue;
    if (row.errors[i] > m) m = row.errors[i];
  }
  return m;
}

bool ConvergenceReport::within_bounds() const {
  for (const auto& row : rows) {
    if (!row.bound) continue;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      if (row.errors[i] * schedule[i] > *row.bound) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rational>> expansion_in_inverse(const Family& family, int order) {
  const auto points = static_cast<std::size_t>(std::max(order, 1));
  RationalMatrix vandermonde(points, std::vector<Rational>(points));
  std::vector<CumulantFunctional> samples;
  for (std::size_t m = 0; m < points; ++m) {
    const Rational x(1, static_cast<long>(m + 1));
    Rational power = 1;
    for (std::size_t j = 0; j < points; ++j, power *= x) vandermonde[m][j] = power;
    samples.push_back(family(x));
  }
  const RationalMatrix inv = inverse(std::move(vandermonde));
  std::vector<std::vector<Rational>> out(samples.front().size(), std::vector<Rational>(points));
  for (std::size_t w = 0; w < out.size(); ++w) {
    for (std::size_t j = 0; j < points; ++j) {
      for (std::size_t m = 0; m < points; ++m) out[w][j] += inv[j][m] * samples[m].values()[w];
    }
  }
  return out;
}

CumulantFunctional array_cumulants(const MomentFunctional& row, std::int64_t n, int order) {
  if (n < 1) throw ValidationError("array_cumulants: N must be positive");
  auto cf = moments_to_cumulants(row.truncated(order));
  for (auto& v : cf.values()) v *= n;
  return cf;
}

MomentFunctional tensor_row(const MomentFunctional& base, const MomentFunctional& psi) {
  if (base.letters() != psi.letters()) throw StructuralError("tensor_row: alphabets differ in size");
  const int order = std::min(base.order(), psi.order());
  MomentFunctional out(base.alphabet(), order);
  for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] = base.values()[i] * psi.values()[i];
  return out;
}

Rational projection_limit(const PoissonSpec& spec, ProjectionModel model, std::span<const Letter> word) {
  if (word.empty()) throw ValidationError("projection_limit: empty word");
  if (model == ProjectionModel::equal) return spec.rates.front();
  for (Letter l : word) {
    if (l != word.front()) return 0;
  }
  return spec.rates[static_cast<std::size_t>(word.front())];
}

ConvergenceReport poisson_limit_check(const PoissonSpec& spec, const std::vector<std::int64_t>& schedule, int order) {
  spec.validate();
  if (spec.size() != 1) throw ValidationError("poisson_limit_check: expects a single rate and jump");
  for (auto n : schedule) {
    if (Rational(n) < spec.rates[0]) throw ValidationError("poisson_limit_check: N must be at least lambda");
  }
  const Rational lambda = spec.rates[0];
  const Rational alpha = spec.jumps[0];
  const auto target = free_poisson(lambda, alpha, order, "a");
  const Family family = [&](const Rational& x) {
    MomentFunctional row(Alphabet({"a"}), order);
    Rational power = alpha;
    for (int n = 1; n <= order; ++n, power *= alpha) row.at(Word(static_cast<std::size_t>(n), 0)) = power * lambda * x;
    return divided(moments_to_cumulants(row), x);
  };
  return build_report("N", schedule, order, family, target, true);
}

ConvergenceReport multi_poisson_limit_check(const PoissonSpec& spec, ProjectionModel model,
                                            const std::vector<std::int64_t>& schedule, int order) {
  spec.validate();
  validate_schedule(schedule);
  for (auto n : schedule) projection_family(spec, model, static_cast<int>(n), 1);
  CumulantFunctional target(Alphabet::numbered("b", spec.size()), order);
  for (std::size_t i = 1; i < target.size(); ++i) {
    const Word w = target.word_at(i);
    Rational v = projection_limit(spec, model, w);
    for (Letter l : w) v *= spec.jumps[static_cast<std::size_t>(l)];
    target.values()[i] = v;
  }
  const Family family = [&](const Rational& x) {
    auto row = scaled_letters(projection_moments(scaled_traces(spec, x), model, order), spec.jumps);
    return divided(moments_to_cumulants(row), x).renamed(target.alphabet());
  };
  return build_report("N", schedule, order, family, target, true);
}

ConvergenceReport compound_limit_check(const MomentFunctional& base, const PoissonSpec& spec, ProjectionModel model,
                                       const std::vector<std::int64_t>& schedule, int order) {
  spec.validate();
  validate_schedule(schedule);
  if (base.order() < order) throw ValidationError("compound_limit_check: base order below requested order");
  if (base.letters() != spec.size()) throw StructuralError("compound_limit_check: one rate per base variable required");
  for (auto n : schedule) projection_family(spec, model, static_cast<int>(n), 1);
  const auto base_cut = base.truncated(order);
  CumulantFunctional target(base.alphabet(), order);
  for (std::size_t i = 1; i < target.size(); ++i) {
    target.values()[i] = base_cut.values()[i] * projection_limit(spec, model, target.word_at(i));
  }
  const Family family = [&](const Rational& x) {
    const auto psi = projection_moments(scaled_traces(spec, x), model, order);
    return divided(moments_to_cumulants(tensor_row(base_cut, psi)), x);
  };
  return build_report("N", schedule, order, family, target, true);
}

CumulantFunctional dilate(const CumulantFunctional& cf, const Rational& t) {
  if (sgn(t) < 0) throw ValidationError("dilate: t must be non-negative");
  CumulantFunctional out = cf;
  for (auto& v : out.values()) v *= t;
  return out;
}

namespace {

CumulantFunctional approximant(const CumulantFunctional& target, const Rational& x, int order) {
  const auto base = cumulants_to_moments(dilate(target.truncated(order), x));
  return compound_free_poisson(1 / x, base, order);
}

}  // namespace

Approximation poisson_approximation(const CumulantFunctional& target, std::int64_t j, int order) {
  if (j < 1) throw ValidationError("poisson_approximation: j must be positive");
  if (target.order() < order) throw ValidationError("poisson_approximation: target order below requested order");
  Approximation out;
  out.j = j;
  out.cumulants = approximant(target, Rational(1, j), order);
  const auto cut = target.truncated(order);
  for (std::size_t i = 0; i < cut.size(); ++i) out.errors.push_back(abs(out.cumulants.values()[i] - cut.values()[i]));
  return out;
}

ConvergenceReport sequence_limit_check(const std::vector<CumulantFunctional>& sequence, const CumulantFunctional& target,
                                       int order, std::vector<std::int64_t> labels) {
  if (target.order() < order) throw ValidationError("sequence_limit_check: target order below requested order");
  for (const auto& cf : sequence) {
    if (!(cf.alphabet() == target.alphabet())) throw StructuralError("sequence_limit_check: alphabet mismatch");
    if (cf.order() < order) throw ValidationError("sequence_limit_check: sequence order below requested order");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < sequence.size(); ++i) labels.push_back(static_cast<std::int64_t>(i + 1));
  }
  if (labels.size() != sequence.size()) throw ValidationError("sequence_limit_check: one label per element required");
  std::size_t next = 0;
  const Family family = [&](const Rational&) { return sequence[next++].truncated(order); };
  return build_report("n", labels, order, family, target.truncated(order), false);
}

ConvergenceReport approximation_report(const CumulantFunctional& target, const std::vector<std::int64_t>& schedule,
                                       int order) {
  if (target.order() < order) throw ValidationError("approximation_report: target order below requested order");
  const Family family = [&](const Rational& x) { return approximant(target, x, order); };
  return build_report("j", schedule, order, family, target.truncated(order), true);
}

}  // namespace fpt
