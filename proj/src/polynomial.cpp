#include "fpt/polynomial.hpp"

#include <algorithm>

namespace fpt {

NcPolynomial NcPolynomial::constant(const Rational& c) { return monomial(Word{}, c); }

NcPolynomial NcPolynomial::monomial(Word word, const Rational& c) {
  NcPolynomial p;
  p.add_term(word, c);
  return p;
}

int NcPolynomial::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void NcPolynomial::add_term(const Word& word, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
  }
  return out;
}

Rational evaluate(const NcPolynomial& p, const std::function<Rational(const Word&)>& phi) {
  Rational sum = 0;
  for (const auto& [w, c] : p.terms()) sum += c * (w.empty() ? Rational(1) : phi(w));
  return sum;
}

MomentFunctional pushforward(const std::function<Rational(const Word&)>& phi, const std::vector<NcPolynomial>& polys,
                             Alphabet names, int order) {
  if (static_cast<std::size_t>(names.size()) != polys.size()) {
    throw StructuralError("pushforward: one name per polynomial required");
  }
  MomentFunctional out(std::move(names), order);
  for (std::size_t i = 1; i < out.size(); ++i) {
    const Word w = out.word_at(i);
    NcPolynomial product = polys[static_cast<std::size_t>(w[0])];
    for (std::size_t j = 1; j < w.size(); ++j) product = product * polys[static_cast<std::size_t>(w[j])];
    out.values()[i] = evaluate(product, phi);
  }
  return out;
}

}  // namespace fpt

namespace fpt {

std::string to_string(const NcPolynomial& p, const Alphabet& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string word;
    for (std::size_t j = 0; j < w.size(); ++j) word += (j ? "*" : "") + names.name(w[j]);
    if (word.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += word;
    } else {
      out += to_string(magnitude) + "*" + word;
    }
  }
  return out;
}

}  // namespace fpt
