#pragma once

#include "fpt/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fpt::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Polynomial expression tree. Positions are kept for error reporting and
/// ignored by equality.
struct Expr {
  enum class Kind { number, variable, add, sub, mul, neg };
  Kind kind = Kind::number;
  Rational value;      ///< number
  std::string name;    ///< variable
  std::vector<Expr> children;  ///< two for add/sub/mul, one for neg
  SourcePos pos;

  static Expr number(Rational v, SourcePos pos = {});
  static Expr variable(std::string name, SourcePos pos = {});
  static Expr binary(Kind kind, Expr lhs, Expr rhs, SourcePos pos = {});
  static Expr negate(Expr operand, SourcePos pos = {});

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Argument value: a rational, a name, or a bracketed list.
struct Value {
  std::variant<Rational, std::string, std::vector<Value>> data;
  SourcePos pos;

  bool is_number() const { return std::holds_alternative<Rational>(data); }
  bool is_name() const { return std::holds_alternative<std::string>(data); }
  bool is_list() const { return std::holds_alternative<std::vector<Value>>(data); }
  friend bool operator==(const Value& a, const Value& b) { return a.data == b.data; }
};

/// key=value, or a positional polynomial expression (queries) / value (constructors).
struct Arg {
  std::optional<std::string> key;
  std::optional<Value> value;  ///< set for keyword arguments and constructor positionals
  std::optional<Expr> expr;    ///< set for query positionals
  SourcePos pos;
  friend bool operator==(const Arg& a, const Arg& b) {
    return a.key == b.key && a.value == b.value && a.expr == b.expr;
  }
};

struct LetStmt {
  std::vector<std::string> names;
  std::string ctor;
  std::vector<Arg> args;
  friend bool operator==(const LetStmt&, const LetStmt&) = default;
};

struct FreeStmt {
  std::vector<std::string> names;
  friend bool operator==(const FreeStmt&, const FreeStmt&) = default;
};

struct OrderStmt {
  int order = 0;
  friend bool operator==(const OrderStmt&, const OrderStmt&) = default;
};

struct QueryStmt {
  std::string kind;  ///< phi, kappa, moments, infdiv, levy_check, limit
  std::vector<Arg> args;
  friend bool operator==(const QueryStmt&, const QueryStmt&) = default;
};

struct Statement {
  std::variant<LetStmt, FreeStmt, OrderStmt, QueryStmt> node;
  SourcePos pos;
  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

inline const std::vector<std::string>& query_kinds() {
  static const std::vector<std::string> kinds{"phi", "kappa", "moments", "infdiv", "levy_check", "limit"};
  return kinds;
}

}  // namespace fpt::dsl
