#include "fpt/infdiv.hpp"

#include "fpt/error.hpp"

namespace fpt {

std::vector<Word> gram_index(int k, int d) {
  std::vector<Word> index;
  for (int m = 1; m <= d; ++m) {
    for (Word& w : all_words(k, m)) index.push_back(std::move(w));
  }
  return index;
}

namespace {

template <class Table>
GramMatrix assemble(const Table& table, int k, int d, Execution exec) {
  if (k < 1 || k > table.letters()) throw ValidationError("gram_matrix: variable count outside the alphabet");
  if (d < 1) throw ValidationError("gram_matrix: degree must be positive");
  if (table.order() < 2 * d) {
    throw ValidationError("gram_matrix: degree " + std::to_string(d) + " needs order " + std::to_string(2 * d) +
                          ", functional has " + std::to_string(table.order()));
  }
  GramMatrix g;
  g.variables = k;
  g.degree = d;
  g.index = gram_index(k, d);
  const std::size_t n = g.index.size();
  g.entries.assign(n, std::vector<Rational>(n));
  const bool parallel = exec == Execution::parallel;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < rows; ++i) {
    const Word& w = g.index[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n; ++j) {
      g.entries[static_cast<std::size_t>(i)][j] = table.at(concat(w, reversed(g.index[j])));
    }
  }
  return g;
}

}  // namespace

GramMatrix gram_matrix(const CumulantFunctional& cf, int k, int d, Execution exec) { return assemble(cf, k, d, exec); }

GramMatrix moment_gram_matrix(const MomentFunctional& mf, int k, int d) {
  return assemble(mf, k, d, Execution::serial);
}

Rational quadratic_form(const RationalMatrix& g, const std::vector<Rational>& v) {
  Rational sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += g[i][j] * v[j];
    sum += v[i] * row;
  }
  return sum;
}

PsdResult is_psd(const RationalMatrix& g, const Rational& tolerance) {
  const std::size_t n = g.size();
  for (const auto& row : g) {
    if (row.size() != n) throw ValidationError("is_psd: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(g[i][j] - g[j][i]) > tolerance) throw ValidationError("is_psd: matrix is not symmetric");
    }
  }
  PsdResult result;
  RationalMatrix s = g;                                         // running Schur complement
  RationalMatrix l(n, std::vector<Rational>(n));                // multipliers below the diagonal
  // Back-substitution through the unit lower factor: v = L^{-T} x.
  auto lift = [&](std::vector<Rational> x, std::size_t eliminated) {
    for (std::size_t i = eliminated; i-- > 0;) {
      Rational acc = 0;
      for (std::size_t r = i + 1; r < n; ++r) acc += l[r][i] * x[r];
      x[i] -= acc;
    }
    return x;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = s[k][k];
    result.pivots.push_back(pivot);
    if (pivot < -tolerance) {
      std::vector<Rational> x(n);
      x[k] = 1;
      result.psd = false;
      result.witness = lift(std::move(x), k);
      result.witness_value = quadratic_form(g, result.witness);
      return result;
    }
    if (sgn(pivot) <= 0) {
      // Treated as a zero pivot: the rest of the row must vanish too.
      for (std::size_t j = k + 1; j < n; ++j) {
        if (abs(s[k][j]) <= tolerance) continue;
        const Rational& b = s[k][j];
        const Rational& c = s[j][j];
        std::vector<Rational> x(n);
        // q(t) = a t^2 + 2 b t + c with a <= 0; 2bt = -(|c| + 1 + tol) forces q < -tol.
        x[k] = -(abs(c) + 1 + tolerance) / (2 * b);
        x[j] = 1;
        result.psd = false;
        result.witness = lift(std::move(x), k);
        result.witness_value = quadratic_form(g, result.witness);
        return result;
      }
      continue;
    }
    ++result.rank;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(s[i][k]) == 0) continue;
      l[i][k] = s[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) s[i][j] -= l[i][k] * s[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) s[i][k] = s[k][i] = 0;
  }
  return result;
}

InfDivReport check_infdiv(const CumulantFunctional& cf, int k, int d, const Rational& tolerance) {
  const GramMatrix g = gram_matrix(cf, k, d);
  const PsdResult psd = is_psd(g.entries, tolerance);
  InfDivReport report;
  report.variables = k;
  report.degree = d;
  report.dimension = g.dimension();
  report.pass = psd.psd;
  report.rank = psd.rank;
  report.pivots = psd.pivots;
  report.index = g.index;
  if (psd.psd) {
    report.note = "positive semidefinite up to degree " + std::to_string(d) +
                  ": consistent with free infinite divisibility, not a proof";
  } else {
    report.witness = psd.witness;
    report.witness_value = psd.witness_value;
    for (std::size_t i = 0; i < g.index.size(); ++i) report.witness_polynomial.add_term(g.index[i], psd.witness[i]);
    report.note = "witness polynomial has negative norm: not freely infinitely divisible";
  }
  return report;
}

KappaChecks kappa_functional_checks(const CumulantFunctional& cf, const MomentFunctional& mf, int d) {
  if (d > cf.order() || d > mf.order()) throw ValidationError("kappa_functional_checks: order exceeds the functionals");
  KappaChecks out;
  out.order = d;
  const MomentFunctional cut = mf.truncated(d);
  out.moment_trace_violations = trace_violations(cut);
  out.tracial_precondition = out.moment_trace_violations.empty();
  const WordLayout& layout = cf.layout();
  for (std::size_t i = layout.offset(1); i < layout.offset(d + 1); ++i) {
    const Word w = layout.word_at(i);
    for (std::size_t split = 1; split < w.size(); ++split) {
      Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
      Word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
      if (cf.at(concat(v, u)) != cf.values()[i]) out.trace_violations.emplace_back(std::move(u), std::move(v));
    }
    if (cf.at(reversed(w)) != cf.values()[i]) out.reversal_violations.push_back(w);
  }
  return out;
}

}  // namespace fpt
