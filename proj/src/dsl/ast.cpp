#include "fpt/dsl/ast.hpp"

namespace fpt::dsl {

Expr Expr::number(Rational v, SourcePos pos) {
  Expr e;
  e.kind = Kind::number;
  e.value = std::move(v);
  e.pos = pos;
  return e;
}

Expr Expr::variable(std::string name, SourcePos pos) {
  Expr e;
  e.kind = Kind::variable;
  e.name = std::move(name);
  e.pos = pos;
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, SourcePos pos) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  e.pos = pos;
  return e;
}

Expr Expr::negate(Expr operand, SourcePos pos) {
  Expr e;
  e.kind = Kind::neg;
  e.children.push_back(std::move(operand));
  e.pos = pos;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::number:
      return a.value == b.value;
    case Expr::Kind::variable:
      return a.name == b.name;
    default:
      return a.children == b.children;
  }
}

}  // namespace fpt::dsl
