#include "fpt/fock.hpp"

#include "fpt/error.hpp"
#include "fpt/freeness.hpp"
#include "fpt/infdiv.hpp"
#include "fpt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace fpt {

double PolySpace::orthonormality_error() const {
  if (basis.cols() == 0) return 0;
  const Eigen::MatrixXd g = basis.transpose() * gram * basis;
  return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

PolySpace build_poly_space(const CumulantFunctional& cf, int k, int d_H, double rank_tolerance) {
  if (d_H < 1) throw ValidationError("poly space: degree must be positive");
  if (k < 1 || k > cf.letters()) throw ValidationError("poly space: variable count outside the alphabet");
  if (cf.order() < 2 * d_H + 1) {
    throw ValidationError("poly space of degree " + std::to_string(d_H) + " needs cumulants to order " +
                          std::to_string(2 * d_H + 1) + ", functional has " + std::to_string(cf.order()));
  }
  const InfDivReport check = check_infdiv(cf, k, d_H);
  if (!check.pass) {
    throw DomainError("Gram form is not positive semidefinite at degree " + std::to_string(d_H) + ": <P, P> = " +
                      to_string(check.witness_value) + " for P = " + to_string(check.witness_polynomial, cf.alphabet()));
  }

  PolySpace ps;
  ps.variables = k;
  ps.degree = d_H;
  ps.index = gram_index(k, d_H);
  const auto n = static_cast<Eigen::Index>(ps.index.size());
  std::vector<Word> reversed_index;
  for (const Word& w : ps.index) reversed_index.push_back(reversed(w));
  ps.gram.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ps.gram(i, j) = to_double(cf.at(concat(ps.index[static_cast<std::size_t>(i)], reversed_index[static_cast<std::size_t>(j)])));
    }
  }

  // Pivoted Cholesky: the pivot monomials span the quotient by the kernel.
  Eigen::MatrixXd residual = ps.gram;
  Eigen::MatrixXd factor = Eigen::MatrixXd::Zero(n, n);
  std::vector<Eigen::Index> pivots;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index r = 0; r < n; ++r) {
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!used[static_cast<std::size_t>(i)] && (best < 0 || residual(i, i) > residual(best, best))) best = i;
    }
    if (best < 0 || residual(best, best) < rank_tolerance) break;
    used[static_cast<std::size_t>(best)] = true;
    pivots.push_back(best);
    factor.col(r) = residual.col(best) / std::sqrt(residual(best, best));
    residual -= factor.col(r) * factor.col(r).transpose();
  }
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  Eigen::MatrixXd lower(rank, rank);
  for (Eigen::Index q = 0; q < rank; ++q) {
    for (Eigen::Index c = 0; c < rank; ++c) lower(q, c) = c <= q ? factor(pivots[static_cast<std::size_t>(q)], c) : 0.0;
  }
  const Eigen::MatrixXd inverse_t =
      lower.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(rank, rank));
  ps.basis = Eigen::MatrixXd::Zero(n, rank);
  for (Eigen::Index q = 0; q < rank; ++q) ps.basis.row(pivots[static_cast<std::size_t>(q)]) = inverse_t.row(q);

  for (int i = 0; i < k; ++i) {
    ps.means.push_back(to_double(cf.at(Word{i})));
    ps.generators.push_back(ps.basis.transpose() * ps.gram.col(i));
    Eigen::MatrixXd shifted(n, n);
    for (Eigen::Index w = 0; w < n; ++w) {
      for (Eigen::Index v = 0; v < n; ++v) {
        Word word{i};
        const Word& right = ps.index[static_cast<std::size_t>(v)];
        word.insert(word.end(), right.begin(), right.end());
        const Word& rw = reversed_index[static_cast<std::size_t>(w)];
        word.insert(word.end(), rw.begin(), rw.end());
        shifted(w, v) = to_double(cf.at(word));
      }
    }
    ps.multiplication.push_back(ps.basis.transpose() * shifted * ps.basis);
  }
  return ps;
}

TimeBasis::TimeBasis(std::vector<Rational> breakpoints) : breakpoints_(std::move(breakpoints)) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
  if (std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end()) {
    throw ValidationError("time basis: breakpoints must be distinct");
  }
  if (breakpoints_.size() < 2) throw ValidationError("time basis: at least two breakpoints required");
  if (sgn(breakpoints_.front()) < 0) throw ValidationError("time basis: breakpoints must be non-negative");
}

Eigen::VectorXd TimeBasis::mask(const Rational& s, const Rational& t) const {
  if (!(s < t)) throw ValidationError("interval (" + to_string(s) + ", " + to_string(t) + ") needs s < t");
  auto locate = [&](const Rational& x) {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end() || *it != x) throw ValidationError("time " + to_string(x) + " is not a breakpoint");
    return static_cast<Eigen::Index>(it - breakpoints_.begin());
  };
  const auto from = locate(s);
  const auto to = locate(t);
  Eigen::VectorXd m = Eigen::VectorXd::Zero(intervals());
  for (Eigen::Index i = from; i < to; ++i) m(i) = 1;
  return m;
}

Eigen::VectorXd TimeBasis::indicator(const Rational& s, const Rational& t) const {
  Eigen::VectorXd m = mask(s, t);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) != 0) m(i) = std::sqrt(to_double(length(static_cast<int>(i))));
  }
  return m;
}

std::vector<Rational> levy_breakpoints() {
  return {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
}

FockModel::FockModel(PolySpace poly, TimeBasis time, int n_max)
    : poly_(std::move(poly)), time_(std::move(time)), n_max_(n_max) {
  if (n_max < 0) throw ValidationError("Fock model: particle cap must be non-negative");
}

std::uint64_t FockModel::dim_fock() const {
  const auto d = static_cast<std::uint64_t>(dim_one_particle());
  std::uint64_t total = 1;
  std::uint64_t power = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int m = 1; m <= n_max_; ++m) {
    if (d != 0 && power > kMax / d) return kMax;
    power *= d;
    if (total > kMax - power) return kMax;
    total += power;
  }
  return total;
}

Eigen::VectorXd FockModel::one_particle(int variable, const Rational& s, const Rational& t) const {
  if (variable < 0 || variable >= poly_.variables) throw ValidationError("Fock model: variable out of range");
  const Eigen::VectorXd chi = time_.indicator(s, t);
  const Eigen::VectorXd& x = poly_.generators[static_cast<std::size_t>(variable)];
  Eigen::VectorXd out(dim_one_particle());
  for (Eigen::Index m = 0; m < chi.size(); ++m) out.segment(m * x.size(), x.size()) = chi(m) * x;
  return out;
}

FockModel build_fock_model(const CumulantFunctional& cf, int k, int order, std::vector<Rational> breakpoints) {
  return FockModel(build_poly_space(cf, k, order), TimeBasis(std::move(breakpoints)), order);
}

FockState FockState::vacuum(int n_max) {
  FockState s;
  s.levels.resize(static_cast<std::size_t>(n_max) + 1);
  s.levels[0] = Eigen::VectorXd::Ones(1);
  return s;
}

int FockState::top_level() const {
  for (auto m = static_cast<int>(levels.size()) - 1; m >= 0; --m) {
    if (levels[static_cast<std::size_t>(m)].size() > 0) return m;
  }
  return -1;
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
  scalar += other.scalar;
  creations.insert(creations.end(), other.creations.begin(), other.creations.end());
  annihilations.insert(annihilations.end(), other.annihilations.begin(), other.annihilations.end());
  gauges.insert(gauges.end(), other.gauges.begin(), other.gauges.end());
  return *this;
}

FockOperator& FockOperator::operator*=(double c) {
  scalar *= c;
  for (auto& x : creations) x *= c;
  for (auto& x : annihilations) x *= c;
  for (auto& a : gauges) a *= c;
  return *this;
}

FockOperator FockOperator::adjoint() const {
  FockOperator out;
  out.scalar = scalar;
  out.creations = annihilations;
  out.annihilations = creations;
  for (const auto& a : gauges) out.gauges.push_back(a.transpose());
  return out;
}

namespace {

void check_dimension(const Eigen::VectorXd& x, const FockModel& model) {
  if (x.size() != model.dim_one_particle()) throw StructuralError("one-particle vector has the wrong dimension");
}

void accumulate(Eigen::VectorXd& target, const Eigen::VectorXd& add) {
  if (target.size() == 0) {
    target = add;
  } else {
    target += add;
  }
}

}  // namespace

FockOperator creation(const Eigen::VectorXd& x, const FockModel& model) {
  check_dimension(x, model);
  FockOperator op;
  op.creations.push_back(x);
  return op;
}

FockOperator annihilation(const Eigen::VectorXd& x, const FockModel& model) {
  check_dimension(x, model);
  FockOperator op;
  op.annihilations.push_back(x);
  return op;
}

FockOperator gauge(const Eigen::MatrixXd& t_time, const Eigen::MatrixXd& t_poly, const FockModel& model) {
  if (t_time.rows() != model.time().intervals() || t_time.cols() != model.time().intervals() ||
      t_poly.rows() != model.dim_h() || t_poly.cols() != model.dim_h()) {
    throw StructuralError("gauge: operator dimensions do not match the model");
  }
  const Eigen::Index r = model.dim_h();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(model.dim_one_particle(), model.dim_one_particle());
  for (Eigen::Index i = 0; i < t_time.rows(); ++i) {
    for (Eigen::Index j = 0; j < t_time.cols(); ++j) {
      if (t_time(i, j) != 0) a.block(i * r, j * r, r, r) = t_time(i, j) * t_poly;
    }
  }
  FockOperator op;
  op.gauges.push_back(std::move(a));
  return op;
}

FockOperator levy_increment(int variable, const Rational& s, const Rational& t, const FockModel& model) {
  if (!(s < t)) throw ValidationError("levy_increment needs s < t");
  const Eigen::VectorXd x = model.one_particle(variable, s, t);
  FockOperator op = creation(x, model) + annihilation(x, model) +
                    gauge(model.time().mask(s, t).asDiagonal().toDenseMatrix(),
                          model.poly().multiplication[static_cast<std::size_t>(variable)], model);
  op.scalar = to_double(t - s) * model.poly().means[static_cast<std::size_t>(variable)];
  return op;
}

FockOperator levy_process(int variable, const Rational& t, const FockModel& model) {
  if (sgn(t) < 0) throw ValidationError("levy_process needs t >= 0");
  if (variable < 0 || variable >= model.poly().variables) throw ValidationError("Fock model: variable out of range");
  if (sgn(t) == 0) return {};
  return levy_increment(variable, 0, t, model);
}

FockState apply(const FockOperator& op, const FockState& state, const FockModel& model, int max_level) {
  const int cap = max_level < 0 ? model.n_max() : std::min(max_level, model.n_max());
  const Eigen::Index d = model.dim_one_particle();
  FockState out;
  out.levels.resize(static_cast<std::size_t>(model.n_max()) + 1);
  for (int m = 0; m < static_cast<int>(state.levels.size()); ++m) {
    const Eigen::VectorXd& v = state.levels[static_cast<std::size_t>(m)];
    if (v.size() == 0) continue;
    if (op.scalar != 0 && m <= cap) accumulate(out.levels[static_cast<std::size_t>(m)], op.scalar * v);
    if (m + 1 <= cap) {
      for (const auto& x : op.creations) {
        Eigen::VectorXd next(v.size() * d);
        Eigen::Map<Eigen::MatrixXd>(next.data(), v.size(), d).noalias() = v * x.transpose();
        accumulate(out.levels[static_cast<std::size_t>(m) + 1], next);
      }
    }
    if (m == 0) continue;
    const Eigen::Index rest = v.size() / d;
    const Eigen::Map<const Eigen::MatrixXd> view(v.data(), rest, d);
    if (m - 1 <= cap) {
      for (const auto& x : op.annihilations) accumulate(out.levels[static_cast<std::size_t>(m) - 1], view * x);
    }
    if (m <= cap) {
      for (const auto& a : op.gauges) {
        Eigen::VectorXd next(v.size());
        Eigen::Map<Eigen::MatrixXd>(next.data(), rest, d).noalias() = view * a.transpose();
        accumulate(out.levels[static_cast<std::size_t>(m)], next);
      }
    }
  }
  return out;
}

double vacuum_moment(const std::vector<const FockOperator*>& ops, const FockModel& model) {
  FockState state = FockState::vacuum(model.n_max());
  for (std::size_t k = ops.size(); k-- > 0;) {
    state = apply(*ops[k], state, model, static_cast<int>(k));
    if (state.top_level() < 0) return 0;
  }
  return state.levels[0].size() == 0 ? 0.0 : state.levels[0](0);
}

double vacuum_moment(const std::vector<FockOperator>& ops, const FockModel& model) {
  std::vector<const FockOperator*> ptrs;
  for (const auto& op : ops) ptrs.push_back(&op);
  return vacuum_moment(ptrs, model);
}

Eigen::MatrixXd matrix(const FockOperator& op, const FockModel& model, std::size_t max_dimension) {
  const std::uint64_t dim = model.dim_fock();
  if (dim > max_dimension) {
    throw CapacityError("Fock space dimension " + std::to_string(dim) + " exceeds the dense limit " +
                        std::to_string(max_dimension));
  }
  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<Eigen::Index> offset{0};
  Eigen::Index size = 1;
  for (int m = 0; m <= model.n_max(); ++m) {
    offset.push_back(offset.back() + size);
    size *= model.dim_one_particle();
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m <= model.n_max(); ++m) {
    const Eigen::Index level_size = offset[static_cast<std::size_t>(m) + 1] - offset[static_cast<std::size_t>(m)];
    for (Eigen::Index j = 0; j < level_size; ++j) {
      FockState e;
      e.levels.resize(static_cast<std::size_t>(model.n_max()) + 1);
      e.levels[static_cast<std::size_t>(m)] = Eigen::VectorXd::Unit(level_size, j);
      const FockState image = apply(op, e, model);
      for (int l = 0; l <= model.n_max(); ++l) {
        const auto& v = image.levels[static_cast<std::size_t>(l)];
        if (v.size() > 0) out.col(offset[static_cast<std::size_t>(m)] + j).segment(offset[static_cast<std::size_t>(l)], v.size()) = v;
      }
    }
  }
  return out;
}

FloatMoments operator_moments(const std::vector<FockOperator>& ops, const Alphabet& names, int order,
                              const FockModel& model) {
  if (static_cast<std::size_t>(names.size()) != ops.size()) throw StructuralError("operator_moments: one name per operator");
  FloatMoments mf(names, order);
  std::vector<const FockOperator*> word_ops;
  for (std::size_t i = 1; i < mf.size(); ++i) {
    word_ops.clear();
    for (Letter l : mf.word_at(i)) word_ops.push_back(&ops[static_cast<std::size_t>(l)]);
    mf.values()[i] = vacuum_moment(word_ops, model);
  }
  return mf;
}

namespace {

CumulantFunctional first_letters(const CumulantFunctional& cf, int k, int order) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(cf.alphabet().name(i));
  CumulantFunctional out{Alphabet(names), order};
  for (std::size_t i = 1; i < out.size(); ++i) out.values()[i] = cf.at(out.word_at(i));
  return out;
}

Alphabet tagged(const Alphabet& base, const std::string& tag) {
  std::vector<std::string> names;
  for (int i = 0; i < base.size(); ++i) names.push_back(base.name(i) + "@" + tag);
  return Alphabet(names);
}

std::vector<FockOperator> increments(int k, const Rational& s, const Rational& t, const FockModel& model) {
  std::vector<FockOperator> ops;
  for (int i = 0; i < k; ++i) ops.push_back(levy_increment(i, s, t, model));
  return ops;
}

template <class Tag>
double max_difference(const WordFunctional<double, Tag>& a, const WordFunctional<double, Tag>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

double state_difference(const FockState& a, const FockState& b) {
  double m = 0;
  for (std::size_t l = 0; l < std::max(a.levels.size(), b.levels.size()); ++l) {
    const Eigen::VectorXd* va = l < a.levels.size() && a.levels[l].size() > 0 ? &a.levels[l] : nullptr;
    const Eigen::VectorXd* vb = l < b.levels.size() && b.levels[l].size() > 0 ? &b.levels[l] : nullptr;
    if (va && vb) {
      m = std::max(m, (*va - *vb).cwiseAbs().maxCoeff());
    } else if (va) {
      m = std::max(m, va->cwiseAbs().maxCoeff());
    } else if (vb) {
      m = std::max(m, vb->cwiseAbs().maxCoeff());
    }
  }
  return m;
}

void finish(LevySection& section) { section.passed = section.passed && section.max_error <= section.tolerance; }

}  // namespace

LevyReport verify_levy_axioms(const FockModel& model, const CumulantFunctional& cf, int order,
                              const LevyTolerances& tolerances) {
  if (order < 1) throw ValidationError("verify_levy_axioms: order must be positive");
  if (model.n_max() < order || model.poly().degree < order) {
    throw CapacityError("verify_levy_axioms: order " + std::to_string(order) + " exceeds the truncation (n_max " +
                        std::to_string(model.n_max()) + ", d_H " + std::to_string(model.poly().degree) + ")");
  }
  const auto& bps = model.time().breakpoints();
  for (const auto& b : levy_breakpoints()) {
    if (!std::binary_search(bps.begin(), bps.end(), b)) {
      throw ValidationError("verify_levy_axioms: model lacks breakpoint " + to_string(b));
    }
  }
  if (cf.order() < order) throw ValidationError("verify_levy_axioms: cumulants below the requested order");
  const int k = model.poly().variables;
  const auto kappa = first_letters(cf, k, order);
  const Alphabet names = kappa.alphabet();
  const auto ops01 = increments(k, 0, 1, model);

  LevyReport report;
  report.order = order;

  const auto m01 = operator_moments(ops01, names, order, model);
  report.reproduction = {"reproduction", max_difference(m01, to_float(cumulants_to_moments(kappa))), tolerances.reproduction,
                         true, "vacuum moments of a_{0,1} against the defining moments"};
  finish(report.reproduction);

  {
    auto joint_ops = ops01;
    const auto ops12 = increments(k, 1, 2, model);
    joint_ops.insert(joint_ops.end(), ops12.begin(), ops12.end());
    std::vector<std::string> joint_names;
    for (int i = 0; i < k; ++i) joint_names.push_back(tagged(names, "(0,1)").name(i));
    for (int i = 0; i < k; ++i) joint_names.push_back(tagged(names, "(1,2)").name(i));
    const auto joint = operator_moments(joint_ops, Alphabet(joint_names), order, model);
    Grouping groups(2);
    for (int i = 0; i < k; ++i) {
      groups[0].push_back(i);
      groups[1].push_back(k + i);
    }
    const auto free = check_freeness(joint, groups, order, tolerances.freeness);
    report.freeness = {"freeness", free.max_mixed, tolerances.freeness, free.is_free(),
                       std::to_string(free.violations.size()) + " mixed cumulants above tolerance"};
    finish(report.freeness);
  }

  {
    const auto m23 = operator_moments(increments(k, 2, 3, model), names, order, model);
    report.stationarity = {"stationarity", max_difference(m01, m23), tolerances.stationarity, true,
                           "moments of a_{0,1} against a_{2,3}"};
    finish(report.stationarity);
  }

  {
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    const int top = std::min(model.n_max() - 1, 2);
    double err = 0;
    for (int trial = 0; trial < 3; ++trial) {
      FockState state;
      state.levels.resize(static_cast<std::size_t>(model.n_max()) + 1);
      Eigen::Index size = 1;
      for (int m = 0; m <= top; ++m, size *= model.dim_one_particle()) {
        Eigen::VectorXd v(size);
        for (Eigen::Index j = 0; j < size; ++j) v(j) = uniform(rng);
        state.levels[static_cast<std::size_t>(m)] = v;
      }
      for (int i = 0; i < k; ++i) {
        err = std::max(err, state_difference(apply(levy_process(i, 0, model), state, model), FockState{}));
        const FockState whole = apply(levy_increment(i, 0, 1, model), state, model);
        const FockState parts = apply(levy_increment(i, 0, Rational(1, 2), model) +
                                          levy_increment(i, Rational(1, 2), 1, model),
                                      state, model);
        err = std::max(err, state_difference(whole, parts));
      }
    }
    report.vanishing = {"vanishing", err, tolerances.vanishing, true,
                        "a_0 applied to random states, and a_{0,1} - a_{0,1/2} - a_{1/2,1}"};
    finish(report.vanishing);
  }

  {
    auto magnitude = kappa;
    for (auto& v : magnitude.values()) v = abs(v);
    const auto bound = to_float(cumulants_to_moments(magnitude));
    const auto target = to_float(kappa);
    double err = 0;
    bool shrinking = true;
    double previous = std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    detail << "max |moment| at t = ";
    for (const Rational& t : {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
      const double td = to_double(t);
      const auto mt = operator_moments(increments(k, 0, t, model), names, order, model);
      const auto ct = moments_to_cumulants(mt, Execution::serial);
      double largest = 0;
      for (std::size_t i = 1; i < mt.size(); ++i) {
        err = std::max(err, std::abs(ct.values()[i] - td * target.values()[i]));
        largest = std::max(largest, std::abs(mt.values()[i]));
        if (std::abs(mt.values()[i]) > td * bound.values()[i] + tolerances.continuity) shrinking = false;
      }
      if (largest > previous + tolerances.continuity) shrinking = false;
      previous = largest;
      detail << to_string(t) << ": " << largest << "; ";
    }
    report.continuity = {"continuity", err, tolerances.continuity, shrinking, detail.str()};
    finish(report.continuity);
  }
  return report;
}

}  // namespace fpt
