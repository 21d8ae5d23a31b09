// Acceptance checks 1-12. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "fpt/dsl/parser.hpp"
#include "fpt/dsl/session.hpp"
#include "fpt/fock.hpp"
#include "fpt/freeness.hpp"
#include "fpt/infdiv.hpp"
#include "fpt/limits.hpp"
#include "fpt/models.hpp"
#include "fpt/nc_partition.hpp"
#include "fpt/transform.hpp"

#include "../program_generator.hpp"
#include "../support.hpp"

#include <gmpxx.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using fpt::Rational;
using fpt::Word;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Word power(int n, fpt::Letter l = 0) { return Word(static_cast<std::size_t>(n), l); }

std::string str(const Rational& r) { return fpt::to_string(r); }

Outcome catalan_counts() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 12; ++n) {
    mpz_class num, den1, den2;
    mpz_fac_ui(num.get_mpz_t(), 2 * static_cast<unsigned long>(n));
    mpz_fac_ui(den1.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(den2.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    const mpz_class expected = num / (den1 * den2);
    const auto count = fpt::enumerate_nc(n).size();
    out.require(mpz_class(static_cast<unsigned long>(count)) == expected,
                "|NC(" + std::to_string(n) + ")| = " + std::to_string(count) + ", expected " + expected.get_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < 60, "enumeration took " + std::to_string(seconds) + " s");
  if (out.pass) out.detail = "n = 1..12, C_12 = 208012, " + std::to_string(seconds) + " s";
  return out;
}

Outcome mobius_convolution() {
  Outcome out;
  std::size_t intervals = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : fpt::enumerate_nc(n)) {
      const auto above = fpt::upper_set(p);
      for (const auto& s : above) {
        std::int64_t sum = 0;
        for (const auto& r : above) {
          if (fpt::leq(r, s)) sum += fpt::mobius(p, r);
        }
        ++intervals;
        out.require(sum == (p == s ? 1 : 0), "interval [" + p.to_string() + ", " + s.to_string() + "] sums to " +
                                                 std::to_string(sum));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(intervals) + " intervals, n <= 6";
  return out;
}

Outcome roundtrip() {
  Outcome out;
  std::mt19937 rng(20240101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mf = fpt::testing::random_moments(rng, 2, 8);
    out.require(fpt::cumulants_to_moments(fpt::moments_to_cumulants(mf)) == mf,
                "instance " + std::to_string(trial) + " differs after m -> kappa -> m");
  }
  if (out.pass) out.detail = "100 random 2-variable functionals, order 8, exact";
  return out;
}

Outcome freeness_both_directions() {
  Outcome out;
  std::mt19937 rng(77);
  const auto a = fpt::testing::random_moments(rng, 2, 6).renamed(fpt::Alphabet({"a1", "a2"}));
  const auto b = fpt::testing::random_moments(rng, 1, 6).renamed(fpt::Alphabet({"b"}));
  const auto c = fpt::testing::random_moments(rng, 2, 6).renamed(fpt::Alphabet({"c1", "c2"}));
  const auto joint = fpt::free_product({a, b, c}, 6);
  const auto report = fpt::check_freeness(joint, {{0, 1}, {2}, {3, 4}}, 6, Rational(0));
  out.require(report.is_free() && sgn(report.max_mixed) == 0,
              std::to_string(report.violations.size()) + " nonzero mixed cumulants in a free product");

  fpt::MomentFunctional classical(fpt::Alphabet({"a", "b"}), 4);
  for (std::size_t i = 1; i < classical.size(); ++i) {
    const Word w = classical.word_at(i);
    const auto as = std::count(w.begin(), w.end(), 0);
    const auto bs = static_cast<std::ptrdiff_t>(w.size()) - as;
    classical.values()[i] = (as % 2 == 0 && bs % 2 == 0) ? 1 : 0;
  }
  const Rational k4 = fpt::moments_to_cumulants(classical).at({0, 1, 0, 1});
  out.require(k4 == 1, "classical counterexample gives kappa_4(a,b,a,b) = " + str(k4));
  out.require(!fpt::check_freeness(classical, {{0}, {1}}, 4, Rational(0)).is_free(),
              "classical counterexample certified free");
  if (out.pass) out.detail = "3 families order 6: max mixed |kappa| = 0; classical kappa_4(a,b,a,b) = 1";
  return out;
}

Outcome poisson_limit() {
  Outcome out;
  const auto report = fpt::poisson_limit_check({{1}, {1}}, {10, 100, 1000}, 6);
  out.require(report.within_bounds(), "an error exceeds K_m / N");
  out.require(report.expansion_matches_target, "expansion constant term differs from lambda alpha^m");
  std::ostringstream detail;
  for (const auto& row : report.rows) {
    const int m = static_cast<int>(row.word.size());
    if (m == 1) {
      for (const auto& e : row.errors) out.require(sgn(e) == 0, "kappa_1 error nonzero");
      continue;
    }
    for (std::size_t i = 0; i + 1 < row.errors.size(); ++i) {
      out.require(row.errors[i] > row.errors[i + 1], "m = " + std::to_string(m) + ": error does not decrease");
    }
    const double ratio = fpt::to_double(row.errors[1] / row.errors[2]);
    out.require(ratio >= 9 && ratio <= 11, "m = " + std::to_string(m) + ": 100 -> 1000 ratio " + std::to_string(ratio));
    detail << "K_" << m << "=" << str(*row.bound) << " ";
  }
  if (out.pass) out.detail = detail.str() + "(decade ratio 100->1000 within [9, 11])";
  return out;
}

Outcome multi_poisson() {
  Outcome out;
  const fpt::PoissonSpec spec{{1, Rational(1, 2)}, {2, -1}};
  const auto orth = fpt::multi_poisson_limit_check(spec, fpt::ProjectionModel::orthogonal, {10, 100, 1000}, 6);
  for (const auto& row : orth.rows) {
    const bool pure = std::all_of(row.word.begin(), row.word.end(), [&](auto l) { return l == row.word[0]; });
    const Rational want = pure ? spec.rates[row.word[0]] *
                                     fpt::pow(spec.jumps[row.word[0]], static_cast<unsigned>(row.word.size()))
                               : Rational(0);
    out.require(row.target == want, "orthogonal target mismatch at " + orth.alphabet.format(row.word));
  }
  out.require(orth.expansion_matches_target && orth.within_bounds(), "orthogonal model outside K/N");

  const fpt::PoissonSpec same{{2, 2}, {3, Rational(1, 2)}};
  const auto eq = fpt::multi_poisson_limit_check(same, fpt::ProjectionModel::equal, {10, 100, 1000}, 6);
  for (const auto& row : eq.rows) {
    Rational want = 2;
    for (auto l : row.word) want *= same.jumps[l];
    out.require(row.target == want, "equal target mismatch at " + eq.alphabet.format(row.word));
  }
  out.require(eq.expansion_matches_target && eq.within_bounds(), "equal model outside K/N");
  if (out.pass) {
    out.detail = "order 6, " + std::to_string(orth.rows.size()) + " words per model; max error at N=1000: orthogonal " +
                 std::to_string(fpt::to_double(orth.max_error(2))) + ", equal " +
                 std::to_string(fpt::to_double(eq.max_error(2)));
  }
  return out;
}

Outcome tensor_factorization() {
  Outcome out;
  std::mt19937 rng(88);
  const auto base = fpt::testing::random_moments(rng, 2, 4);
  const fpt::PoissonSpec spec{{1, 2}, {1, 1}};
  for (auto model : {fpt::ProjectionModel::orthogonal, fpt::ProjectionModel::free, fpt::ProjectionModel::equal}) {
    const fpt::PoissonSpec s = model == fpt::ProjectionModel::equal ? fpt::PoissonSpec{{2, 2}, {1, 1}} : spec;
    const auto psi = fpt::projection_family(s, model, 10, 4);
    const auto row = fpt::tensor_row(base, psi);
    for (std::size_t i = 1; i < row.size(); ++i) {
      out.require(row.values()[i] == base.values()[i] * psi.values()[i], "tensor row does not factor");
    }
    const auto report = fpt::compound_limit_check(base, s, model, {10, 100, 1000}, 4);
    for (const auto& r : report.rows) {
      out.require(r.target == base.at(r.word) * fpt::projection_limit(s, model, r.word),
                  fpt::to_string(model) + ": limit mismatch at " + report.alphabet.format(r.word));
    }
    out.require(report.within_bounds() && report.expansion_matches_target,
                fpt::to_string(model) + ": finite-N values outside K/N");
  }
  if (out.pass) out.detail = "2-variable base, order 4, equal/orthogonal/free models";
  return out;
}

Outcome sandwich() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(99);
  const fpt::CovarianceMatrix c({{2, 1}, {1, 3}});
  const auto base = fpt::testing::random_moments(rng, 2, 4);
  const auto closed = fpt::sandwich_cumulants(c, base, 4);
  const auto oracle = fpt::testing::sandwich_oracle(c, base, 4);
  for (std::size_t i = 1; i < closed.size(); ++i) {
    out.require(closed.values()[i] == oracle.values()[i],
                "mismatch at " + closed.alphabet().format(closed.word_at(i)) + ": " + str(closed.values()[i]) +
                    " vs " + str(oracle.values()[i]));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < 600, "took " + std::to_string(seconds) + " s");
  if (out.pass) out.detail = "k = 2, n <= 4 (NC(12) expansion), " + std::to_string(seconds) + " s";
  return out;
}

Outcome infdiv_verdicts() {
  Outcome out;
  out.require(fpt::check_infdiv(fpt::semicircle_family(fpt::CovarianceMatrix({{2, 1}, {1, 1}}), 4), 2, 2).pass,
              "semicircle family FAIL");
  const auto fp = fpt::check_infdiv(fpt::free_poisson(3, -2, 4), 1, 2);
  out.require(fp.pass && fp.rank == 1, "free Poisson not PASS with rank 1");
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix::identity(2), 4));
  out.require(fpt::check_infdiv(fpt::compound_free_poisson(2, base, 4), 2, 2).pass, "compound free Poisson FAIL");
  const auto bern = fpt::check_infdiv(fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 4)), 1, 2);
  out.require(!bern.pass, "symmetric Bernoulli PASS");
  out.require(bern.witness_value == -1, "Bernoulli witness value " + str(bern.witness_value));
  const auto g = fpt::gram_matrix(fpt::moments_to_cumulants(fpt::bernoulli(Rational(1, 2), 4)), 1, 2);
  out.require(fpt::quadratic_form(g.entries, bern.witness) == -1, "witness does not evaluate to -1");
  if (out.pass) out.detail = "semicircle PASS, free Poisson PASS rank 1, compound PASS, Bernoulli FAIL v^T G v = -1";
  return out;
}

Outcome approximation_rate() {
  Outcome out;
  const std::vector<std::int64_t> schedule{1, 10, 100, 1000};
  std::ostringstream detail;
  for (const auto& target : {fpt::semicircle(2, 6), fpt::free_poisson(1, 1, 6)}) {
    const auto report = fpt::approximation_report(target, schedule, 6);
    Rational c1 = 0, rest = 0;
    for (const auto& row : report.rows) {
      if (row.word.size() == 1) {
        for (const auto& e : row.errors) out.require(sgn(e) == 0, "order-1 error nonzero");
      }
      c1 = std::max(c1, fpt::abs(row.coefficients.at(1)));
      Rational tail = 0;
      for (std::size_t k = 2; k < row.coefficients.size(); ++k) tail += fpt::abs(row.coefficients[k]);
      rest = std::max(rest, tail);
    }
    out.require(report.expansion_matches_target, "expansion constant term differs from target");
    out.require(sgn(c1) > 0, "leading 1/j coefficient vanishes");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      const Rational j(static_cast<long>(schedule[i]));
      if (i + 1 < schedule.size()) out.require(report.max_error(i) >= report.max_error(i + 1), "error increased");
      out.require(fpt::abs(j * report.max_error(i) - c1) <= rest / j,
                  "j = " + std::to_string(schedule[i]) + ": j * max error not within R/j of " + str(c1));
    }
    detail << target.alphabet().name(0) << ": j*err -> " << str(c1) << "; ";
  }
  if (out.pass) out.detail = detail.str() + "order <= 6";
  return out;
}

Outcome fock_levy() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  // Compound free Poisson of rate 2 over two free standard semicircles.
  const auto base = fpt::cumulants_to_moments(fpt::semicircle_family(fpt::CovarianceMatrix::identity(2), 9));
  const auto cf = fpt::compound_free_poisson(2, base, 9);
  const auto model = fpt::build_fock_model(cf, 2, 4);
  const auto report = fpt::verify_levy_axioms(model, cf, 4);
  out.require(report.reproduction.passed, "reproduction: " + report.reproduction.detail);
  out.require(report.stationarity.passed, "stationarity: " + report.stationarity.detail);
  out.require(report.freeness.passed, "freeness: " + report.freeness.detail);
  out.require(report.vanishing.passed, "vanishing: " + report.vanishing.detail);
  out.require(report.continuity.passed, "continuity: " + report.continuity.detail);

  // Moments of a_{0,t} are polynomials in t without constant term: phi_t(w) = sum over pi of t^|pi| kappa_pi(w).
  double scaling = 0;
  for (const Rational t : {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
    const std::vector<fpt::FockOperator> ops{fpt::levy_process(0, t, model), fpt::levy_process(1, t, model)};
    const auto got = fpt::operator_moments(ops, cf.alphabet(), 4, model);
    const auto want = fpt::to_float(fpt::cumulants_to_moments(fpt::dilate(cf, t).truncated(4)));
    for (std::size_t i = 1; i < want.size(); ++i) scaling = std::max(scaling, std::abs(got.values()[i] - want.values()[i]));
  }
  out.require(scaling < 1e-9, "a_{0,t} moments differ from the dilated law by " + std::to_string(scaling));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < 300, "took " + std::to_string(seconds) + " s");
  if (out.pass) {
    std::ostringstream d;
    d << "dim H = " << model.dim_h() << ", errors " << report.reproduction.max_error << " / "
      << report.stationarity.max_error << " / " << report.freeness.max_error << ", t-scaling " << scaling << ", "
      << seconds << " s";
    out.detail = d.str();
  }
  return out;
}

Outcome dsl_end_to_end() {
  Outcome out;
  auto scalar = [](std::string_view script) {
    fpt::dsl::Session session;
    const auto results = session.run(script);
    return results.size() == 1 && results[0].scalar ? *results[0].scalar : Rational(-999);
  };
  out.require(scalar("let s = semicircle(r=2)\nphi(s*s)") == 1, "semicircle phi(s*s) != 1");
  out.require(scalar("let p = free_poisson(lambda=1, alpha=1)\nkappa(p, p)") == 1, "free Poisson kappa(p,p) != 1");
  const auto sc = fpt::cumulants_to_moments(fpt::semicircle(2, 4));
  const auto joint = fpt::free_product({sc.renamed(fpt::Alphabet({"a"})), sc.renamed(fpt::Alphabet({"b"}))}, 4);
  const Rational abab = scalar("let a = semicircle(r=2)\nlet b = semicircle(r=2)\nfree(a, b)\nphi(a*b*a*b)");
  out.require(abab == joint.at({0, 1, 0, 1}), "phi(abab) = " + str(abab) + " but the free product gives " +
                                                  str(joint.at({0, 1, 0, 1})));
  fpt::testing::ProgramGenerator gen(424242);
  for (int i = 0; i < 100; ++i) {
    const auto program = gen.program();
    const auto text = fpt::dsl::print(program);
    bool same = false;
    try {
      same = fpt::dsl::parse(text) == program;
    } catch (const fpt::Error&) {
    }
    out.require(same, "fixpoint fails on:\n" + text);
  }
  if (out.pass) out.detail = "phi(s*s) = 1, kappa(p,p) = 1, phi(abab) = " + str(abab) + "; 100 random programs";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Catalan counts of NC(n)", catalan_counts},
      {"Mobius convolution identity", mobius_convolution},
      {"moment/cumulant roundtrip", roundtrip},
      {"freeness via vanishing mixed cumulants", freeness_both_directions},
      {"free Poisson limit rate", poisson_limit},
      {"multidimensional free Poisson limits", multi_poisson},
      {"tensor row factorization", tensor_factorization},
      {"sandwich closed formula vs free product", sandwich},
      {"infinite divisibility verdicts", infdiv_verdicts},
      {"compound Poisson approximation rate", approximation_rate},
      {"Fock space Levy process", fock_levy},
      {"DSL end to end", dsl_end_to_end},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << outcome.detail << " [" << std::fixed << std::setprecision(2) << seconds << " s]" << std::defaultfloat
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
