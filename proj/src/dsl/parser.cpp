#include "fpt/dsl/parser.hpp"

namespace fpt::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Program program() {
    Program p;
    skip_newlines();
    while (peek().kind != TokenKind::end) {
      p.statements.push_back(statement());
      if (peek().kind != TokenKind::end) {
        if (peek().kind != TokenKind::newline) fail("expected end of statement", {"newline", "';'"});
        skip_newlines();
      }
    }
    return p;
  }

  Expr single_expr() {
    Expr e = expr();
    if (peek().kind != TokenKind::end) fail("unexpected trailing input", {"end of input", "'+'", "'-'", "'*'"});
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool at_symbol(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::symbol && peek(ahead).text == s;
  }

  [[noreturn]] void fail(const std::string& message, std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, message + ", found " + describe(t), std::move(expected));
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::end:
        return "end of input";
      case TokenKind::newline:
        return t.text == ";" ? "';'" : "end of line";
      default:
        return "'" + t.text + "'";
    }
  }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) fail(std::string("expected '") + s + "'", {std::string("'") + s + "'"});
    take();
  }

  std::string identifier(const char* what) {
    if (peek().kind == TokenKind::keyword) fail(std::string("reserved word used as ") + what, {"identifier"});
    if (peek().kind != TokenKind::identifier) fail(std::string("expected ") + what, {"identifier"});
    return take().text;
  }

  void skip_newlines() {
    while (peek().kind == TokenKind::newline) take();
  }

  Statement statement() {
    Statement s;
    s.pos = peek().pos;
    const Token& head = peek();
    if (head.kind != TokenKind::keyword) {
      fail("expected a statement", {"'let'", "'free'", "'order'", "'phi'", "'kappa'", "'moments'", "'infdiv'",
                                    "'levy_check'", "'limit'"});
    }
    const std::string word = take().text;
    if (word == "let") {
      LetStmt let;
      let.names.push_back(identifier("variable name"));
      while (at_symbol(",")) {
        take();
        let.names.push_back(identifier("variable name"));
      }
      expect_symbol("=");
      let.ctor = identifier("constructor name");
      expect_symbol("(");
      if (!at_symbol(")")) {
        let.args.push_back(ctor_arg());
        while (at_symbol(",")) {
          take();
          let.args.push_back(ctor_arg());
        }
      }
      expect_symbol(")");
      s.node = std::move(let);
    } else if (word == "free") {
      FreeStmt free;
      expect_symbol("(");
      free.names.push_back(identifier("variable name"));
      while (at_symbol(",")) {
        take();
        free.names.push_back(identifier("variable name"));
      }
      expect_symbol(")");
      s.node = std::move(free);
    } else if (word == "order") {
      expect_symbol("(");
      if (peek().kind != TokenKind::number || peek().value.get_den() != 1 || sgn(peek().value) <= 0) {
        fail("expected a positive integer order", {"integer"});
      }
      OrderStmt order{static_cast<int>(take().value.get_num().get_si())};
      expect_symbol(")");
      s.node = order;
    } else {
      QueryStmt q;
      q.kind = word;
      expect_symbol("(");
      if (!at_symbol(")")) {
        q.args.push_back(query_arg());
        while (at_symbol(",")) {
          take();
          q.args.push_back(query_arg());
        }
      }
      expect_symbol(")");
      s.node = std::move(q);
    }
    return s;
  }

  bool keyword_arg_ahead() const {
    return (peek().kind == TokenKind::identifier || peek().kind == TokenKind::keyword) && at_symbol("=", 1);
  }

  Arg keyword_arg() {
    Arg a;
    a.pos = peek().pos;
    a.key = take().text;
    take();
    a.value = value();
    return a;
  }

  Arg ctor_arg() {
    if (keyword_arg_ahead()) return keyword_arg();
    Arg a;
    a.pos = peek().pos;
    a.value = value();
    return a;
  }

  Arg query_arg() {
    if (keyword_arg_ahead()) return keyword_arg();
    Arg a;
    a.pos = peek().pos;
    a.expr = expr();
    return a;
  }

  Value value() {
    Value v;
    v.pos = peek().pos;
    if (peek().kind == TokenKind::number) {
      v.data = take().value;
    } else if (at_symbol("-") && peek(1).kind == TokenKind::number) {
      take();
      v.data = Rational(-take().value);
    } else if (peek().kind == TokenKind::identifier || peek().kind == TokenKind::keyword) {
      // Keywords are plain names in value position, so model=free reads naturally.
      v.data = take().text;
    } else if (at_symbol("[")) {
      take();
      std::vector<Value> items;
      if (!at_symbol("]")) {
        items.push_back(value());
        while (at_symbol(",")) {
          take();
          items.push_back(value());
        }
      }
      expect_symbol("]");
      v.data = std::move(items);
    } else {
      fail("expected a value", {"rational literal", "'-'", "identifier", "'['"});
    }
    return v;
  }

  Expr expr() {
    Expr lhs = term();
    while (at_symbol("+") || at_symbol("-")) {
      const Token& op = take();
      const auto kind = op.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
      const SourcePos pos = op.pos;
      lhs = Expr::binary(kind, std::move(lhs), term(), pos);
    }
    return lhs;
  }

  bool starts_primary() const {
    return peek().kind == TokenKind::number || peek().kind == TokenKind::identifier || at_symbol("(");
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      if (at_symbol("*")) {
        const SourcePos pos = take().pos;
        lhs = Expr::binary(Expr::Kind::mul, std::move(lhs), unary(), pos);
      } else if (starts_primary()) {
        const SourcePos pos = peek().pos;
        lhs = Expr::binary(Expr::Kind::mul, std::move(lhs), unary(), pos);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (at_symbol("-")) {
      const SourcePos pos = take().pos;
      return Expr::negate(unary(), pos);
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::number) {
      take();
      return Expr::number(t.value, t.pos);
    }
    if (t.kind == TokenKind::identifier) {
      take();
      return Expr::variable(t.text, t.pos);
    }
    if (at_symbol("(")) {
      take();
      Expr inner = expr();
      expect_symbol(")");
      return inner;
    }
    fail("expected an expression", {"rational literal", "identifier", "'('", "'-'"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
      return 1;
    case Expr::Kind::mul:
      return 2;
    case Expr::Kind::neg:
      return 3;
    default:
      return 4;
  }
}

std::string wrapped(const Expr& e, int min_precedence) {
  const std::string text = print(e);
  return precedence(e) < min_precedence ? "(" + text + ")" : text;
}

std::string print_args(const std::vector<Arg>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    const Arg& a = args[i];
    if (a.key) out += *a.key + "=";
    if (a.value) {
      out += print(*a.value);
    } else if (a.expr) {
      out += print(*a.expr);
    }
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

Program parse(std::string_view text) { return Parser(text).program(); }

Expr parse_expr(std::string_view text) { return Parser(text).single_expr(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return to_string(e.value);
    case Expr::Kind::variable:
      return e.name;
    case Expr::Kind::add:
      return wrapped(e.children[0], 1) + " + " + wrapped(e.children[1], 2);
    case Expr::Kind::sub:
      return wrapped(e.children[0], 1) + " - " + wrapped(e.children[1], 2);
    case Expr::Kind::mul:
      return wrapped(e.children[0], 2) + "*" + wrapped(e.children[1], 3);
    case Expr::Kind::neg:
      return "-" + wrapped(e.children[0], 3);
  }
  return "";
}

std::string print(const Value& v) {
  if (v.is_number()) return to_string(std::get<Rational>(v.data));
  if (v.is_name()) return std::get<std::string>(v.data);
  std::string out = "[";
  const auto& items = std::get<std::vector<Value>>(v.data);
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + print(items[i]);
  return out + "]";
}

std::string print(const Statement& s) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LetStmt>) {
          return "let " + join_names(node.names) + " = " + node.ctor + "(" + print_args(node.args) + ")";
        } else if constexpr (std::is_same_v<T, FreeStmt>) {
          return "free(" + join_names(node.names) + ")";
        } else if constexpr (std::is_same_v<T, OrderStmt>) {
          return "order(" + std::to_string(node.order) + ")";
        } else {
          return node.kind + "(" + print_args(node.args) + ")";
        }
      },
      s.node);
}

std::string print(const Program& program) {
  std::string out;
  for (const auto& s : program.statements) out += print(s) + "\n";
  return out;
}

}  // namespace fpt::dsl
