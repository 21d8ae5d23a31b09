#pragma once

#include "fpt/dsl/ast.hpp"
#include "fpt/dsl/lexer.hpp"
#include "fpt/functional.hpp"
#include "fpt/io/json.hpp"
#include "fpt/polynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fpt::dsl {

inline constexpr int kDefaultSessionOrder = 8;

/// Evaluation failure tied to a statement or argument position.
class EvalError : public Error {
 public:
  EvalError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct QueryResult {
  std::string query;  ///< the statement, pretty-printed
  std::string text;   ///< human-readable result
  io::Json json;
  std::optional<Rational> scalar;  ///< phi and kappa queries
};

/// Bindings, freeness declarations and the lazily built joint laws of one
/// script. Each `let` creates a family with its own joint law; variables of
/// different families have a joint law only when one `free(...)` statement
/// names all of their families.
class Session {
 public:
  explicit Session(int order = kDefaultSessionOrder);

  int order() const { return order_; }

  /// Parses and runs; each query result goes to `sink` as soon as it is
  /// computed. Throws ParseError before running anything if the text does not
  /// parse, and EvalError at the first failing statement.
  std::vector<QueryResult> run(std::string_view text, const std::function<void(const QueryResult&)>& sink = {});
  std::vector<QueryResult> run(const Program& program, const std::function<void(const QueryResult&)>& sink = {});

  /// nullopt for let/free/order statements.
  std::optional<QueryResult> execute(const Statement& statement);

  /// phi of a polynomial in bound variables.
  Rational phi(const Expr& expr);

  /// Joint moments of the named variables up to `order`. Throws EvalError if
  /// a name is unbound or the variables have no declared joint law.
  MomentFunctional law(const std::vector<std::string>& names, int order, SourcePos pos = {});

  /// Binds the variables of an externally supplied law as one family.
  void bind(const MomentFunctional& moments);

 private:
  struct Family {
    std::vector<std::string> names;
    MomentFunctional moments;
  };
  struct Bound {
    int family = 0;
    Letter letter = 0;
  };
  /// Variables mapped into one joint alphabet.
  struct Joint {
    MomentFunctional moments;
    std::map<std::string, Letter> letter;
  };

  void let(const LetStmt& let, SourcePos pos);
  void declare_free(const FreeStmt& free, SourcePos pos);
  QueryResult query(const QueryStmt& q, SourcePos pos);

  const Bound& lookup(const std::string& name, SourcePos pos) const;
  Joint joint(const std::set<std::string>& names, int order, SourcePos pos);
  NcPolynomial polynomial(const Expr& expr, const Joint& joint) const;
  void collect(const Expr& expr, std::set<std::string>& names) const;

  int order_;
  bool order_locked_ = false;
  std::vector<Family> families_;
  std::map<std::string, Bound> bindings_;
  std::vector<std::set<int>> free_groups_;
  std::map<std::pair<std::vector<int>, int>, MomentFunctional> joint_cache_;
};

}  // namespace fpt::dsl
