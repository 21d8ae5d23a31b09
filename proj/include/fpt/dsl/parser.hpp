#pragma once

#include "fpt/dsl/ast.hpp"
#include "fpt/dsl/lexer.hpp"

#include <string>
#include <string_view>

namespace fpt::dsl {

/// Throws ParseError on the first syntax error; there is no recovery.
Program parse(std::string_view text);

/// Single polynomial expression (used by tests and the CLI).
Expr parse_expr(std::string_view text);

/// Canonical text that parses back to an equal AST.
std::string print(const Program& program);
std::string print(const Statement& statement);
std::string print(const Expr& expr);
std::string print(const Value& value);

}  // namespace fpt::dsl
