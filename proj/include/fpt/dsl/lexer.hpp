#pragma once

#include "fpt/dsl/ast.hpp"
#include "fpt/error.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fpt::dsl {

enum class TokenKind { identifier, number, keyword, symbol, newline, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  Rational value;  ///< number tokens
  SourcePos pos;
};

/// Syntax error with the position and the set of tokens that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message, std::set<std::string> expected = {});
  SourcePos pos() const { return pos_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::set<std::string> expected_;
};

/// Words reserved by the grammar: let, free, order and the query names.
bool is_keyword(std::string_view word);

/// Splits text into tokens. Rational literals are "p" or "p/q" with no inner
/// spaces; '#' starts a comment running to the end of the line; ';' and
/// newlines both end statements and are reported as newline tokens.
std::vector<Token> tokenize(std::string_view text);

}  // namespace fpt::dsl
