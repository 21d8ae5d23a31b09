#include "fpt/dsl/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace fpt::dsl {

namespace {

std::string describe(SourcePos pos, const std::string& message, const std::set<std::string>& expected) {
  std::string out = "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      out += (first ? "" : ", ") + e;
      first = false;
    }
    out += ")";
  }
  return out;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& message, std::set<std::string> expected)
    : Error(describe(pos, message, expected)), pos_(pos), expected_(std::move(expected)) {}

bool is_keyword(std::string_view word) {
  static const std::vector<std::string_view> words{"let",     "free",   "order",      "phi",  "kappa",
                                                   "moments", "infdiv", "levy_check", "limit"};
  return std::find(words.begin(), words.end(), word) != words.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourcePos start = pos;
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      tokens.push_back({TokenKind::newline, c == '\n' ? "newline" : ";", 0, start});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      tokens.push_back({is_keyword(word) ? TokenKind::keyword : TokenKind::identifier, word, 0, start});
      advance(j - i);
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '/') {
        ++j;
        if (j >= text.size() || !digit(text[j])) {
          SourcePos at = start;
          at.column += static_cast<int>(j - i);
          throw ParseError(at, "incomplete rational literal", {"digit"});
        }
        while (j < text.size() && digit(text[j])) ++j;
      }
      if (j < text.size() && (ident_char(text[j]) || text[j] == '.')) {
        SourcePos at = start;
        at.column += static_cast<int>(j - i);
        throw ParseError(at, text[j] == '.' ? "decimal literals are not supported; write p/q"
                                            : "malformed number",
                         {"rational literal p/q"});
      }
      std::string literal(text.substr(i, j - i));
      Rational value;
      try {
        value = parse_rational(literal);
      } catch (const Error&) {
        throw ParseError(start, "invalid rational literal '" + literal + "'");
      }
      tokens.push_back({TokenKind::number, literal, value, start});
      advance(j - i);
    } else if (std::string_view("()[],=+-*").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::symbol, std::string(1, c), 0, start});
      advance(1);
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back({TokenKind::end, "end of input", 0, pos});
  return tokens;
}

}  // namespace fpt::dsl
