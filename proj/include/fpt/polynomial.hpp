#pragma once

#include "fpt/functional.hpp"

#include <functional>
#include <map>
#include <string>

namespace fpt {

/// Element of the free algebra over an alphabet's letters: a finite sum of
/// rational multiples of words. Zero coefficients are never stored.
class NcPolynomial {
 public:
  NcPolynomial() = default;
  static NcPolynomial constant(const Rational& c);
  static NcPolynomial monomial(Word word, const Rational& c = 1);
  static NcPolynomial variable(Letter letter) { return monomial(Word{letter}); }

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest word length; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Word& word, const Rational& c);

  NcPolynomial& operator+=(const NcPolynomial& other);
  NcPolynomial& operator-=(const NcPolynomial& other);
  NcPolynomial& operator*=(const Rational& c);

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  friend NcPolynomial operator*(NcPolynomial a, const Rational& c) { return a *= c; }
  /// Noncommutative product: words concatenate.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

 private:
  std::map<Word, Rational> terms_;
};

/// Linear extension of a moment oracle: sum of c * phi(w).
Rational evaluate(const NcPolynomial& p, const std::function<Rational(const Word&)>& phi);

/// Joint moments of new variables Y_j = polys[j] written in the letters of a
/// joint law, up to `order`: phi_Y(j1...jn) = phi(P_j1 ... P_jn), expanded
/// monomial by monomial.
MomentFunctional pushforward(const std::function<Rational(const Word&)>& phi, const std::vector<NcPolynomial>& polys,
                             Alphabet names, int order);

}  // namespace fpt

namespace fpt {

/// Human form over the alphabet's names, e.g. "a*a - 3/2*a*b". Zero prints as "0".
std::string to_string(const NcPolynomial& p, const Alphabet& names);

}  // namespace fpt
