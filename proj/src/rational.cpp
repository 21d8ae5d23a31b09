#include "fpt/rational.hpp"

#include "fpt/error.hpp"

#include <cctype>

namespace fpt {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("not a rational literal: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& value, unsigned exponent) {
  Rational result = 1;
  Rational base = value;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace fpt
