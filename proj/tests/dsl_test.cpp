#include "fpt/dsl/parser.hpp"
#include "fpt/dsl/session.hpp"

#include "fpt/freeness.hpp"
#include "fpt/models.hpp"
#include "program_generator.hpp"

#include <gtest/gtest.h>


using fpt::Rational;
using namespace fpt::dsl;

namespace {

const QueryStmt& query_of(const Statement& s) { return std::get<QueryStmt>(s.node); }

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError({0, 0}, "none");
}

Rational single_scalar(std::string_view script) {
  Session session;
  const auto results = session.run(script);
  if (results.size() != 1 || !results[0].scalar) throw std::runtime_error("expected one scalar result");
  return *results[0].scalar;
}

}  // namespace

TEST(Lexer, RationalsCommentsAndSeparators) {
  const auto tokens = tokenize("phi(3/4 x) # trailing\n;");
  ASSERT_GE(tokens.size(), 6u);
  EXPECT_EQ(tokens[0].kind, TokenKind::keyword);
  EXPECT_EQ(tokens[2].kind, TokenKind::number);
  EXPECT_EQ(tokens[2].value, Rational(3, 4));
  EXPECT_EQ(tokens[3].kind, TokenKind::identifier);
  EXPECT_EQ(tokens[5].kind, TokenKind::newline);
  EXPECT_EQ(tokens.back().kind, TokenKind::end);
  EXPECT_EQ(tokens[3].pos.column, 9);
}

TEST(Lexer, RejectsDecimalsAndZeroDenominators) {
  EXPECT_THROW(tokenize("phi(0.5 x)"), ParseError);
  EXPECT_THROW(tokenize("phi(1/0 x)"), ParseError);
  EXPECT_THROW(tokenize("phi(x) $"), ParseError);
}

TEST(Parser, LetBinding) {
  const auto program = parse("let s = semicircle(r=2)");
  ASSERT_EQ(program.statements.size(), 1u);
  const auto& let = std::get<LetStmt>(program.statements[0].node);
  EXPECT_EQ(let.names, std::vector<std::string>{"s"});
  EXPECT_EQ(let.ctor, "semicircle");
  ASSERT_EQ(let.args.size(), 1u);
  EXPECT_EQ(*let.args[0].key, "r");
  EXPECT_EQ(*let.args[0].value, (Value{Rational(2), {}}));
}

TEST(Parser, QueryWord) {
  const auto program = parse("phi(s*s)");
  const auto& q = query_of(program.statements[0]);
  EXPECT_EQ(q.kind, "phi");
  ASSERT_EQ(q.args.size(), 1u);
  EXPECT_EQ(*q.args[0].expr, Expr::binary(Expr::Kind::mul, Expr::variable("s"), Expr::variable("s")));
}

TEST(Parser, JuxtapositionIsProduct) {
  EXPECT_EQ(parse_expr("2 a b"), parse_expr("2*a*b"));
  EXPECT_EQ(parse_expr("a (b + c)"), parse_expr("a*(b + c)"));
  EXPECT_EQ(parse_expr("a - b - c"),
            Expr::binary(Expr::Kind::sub, Expr::binary(Expr::Kind::sub, Expr::variable("a"), Expr::variable("b")),
                         Expr::variable("c")));
}

TEST(Parser, EmptyArgumentIsAnError) {
  const auto e = parse_error("let p = free_poisson(lambda=1, alpha=)");
  EXPECT_EQ(e.pos().line, 1);
  EXPECT_EQ(e.pos().column, 38);
  EXPECT_NE(std::string(e.what()).find("line 1, column 38"), std::string::npos);
  EXPECT_FALSE(e.expected().empty());
}

TEST(Parser, ErrorsCarryPositions) {
  const auto e = parse_error("order(4)\nphi(a b\n");
  EXPECT_EQ(e.pos().line, 2);
  EXPECT_EQ(parse_error("free()").pos().column, 6);
  EXPECT_EQ(parse_error("let = semicircle()").pos().column, 5);
  EXPECT_EQ(parse_error("phi(a) phi(b)").pos().column, 8);
  EXPECT_EQ(parse_error("let phi = semicircle()").pos().column, 5);
}

TEST(Parser, PrintParseFixpoint) {
  fpt::testing::ProgramGenerator gen(20240607);
  for (int i = 0; i < 100; ++i) {
    const Program original = gen.program();
    const std::string text = print(original);
    Program reparsed;
    ASSERT_NO_THROW(reparsed = parse(text)) << text;
    ASSERT_EQ(reparsed, original) << text;
    ASSERT_EQ(print(reparsed), text);
  }
}

TEST(Session, Semicircle) { EXPECT_EQ(single_scalar("let s = semicircle(r=2)\nphi(s*s)"), 1); }

TEST(Session, FreePoissonCumulant) {
  EXPECT_EQ(single_scalar("let p = free_poisson(lambda=1, alpha=1)\nkappa(p, p)"), 1);
}

TEST(Session, FreeAlternatingMomentMatchesFreeProduct) {
  const auto value = single_scalar("let a = semicircle(r=2); let b = semicircle(r=2); free(a, b); phi(a*b*a*b)");
  const auto sc = fpt::cumulants_to_moments(fpt::semicircle(2, 4));
  const auto joint = fpt::free_product({sc.renamed(fpt::Alphabet({"a"})), sc.renamed(fpt::Alphabet({"b"}))}, 4);
  EXPECT_EQ(value, joint.at({0, 1, 0, 1}));
  EXPECT_EQ(value, 0);
}

TEST(Session, Linearity) {
  const std::string prelude = "let a = free_poisson(lambda=2, alpha=1/3); let b = bernoulli(p=1/5); free(a, b)\n";
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"a*b*a", "3/2 b b - a"}, {"(a + b)*(a - b)", "7"}, {"a a a a", "-b*a*b"}};
  for (const auto& [p, q] : pairs) {
    const auto sum = single_scalar(prelude + "phi(" + p + " + " + q + ")");
    const auto lhs = single_scalar(prelude + "phi(" + p + ")");
    const auto rhs = single_scalar(prelude + "phi(" + q + ")");
    EXPECT_EQ(sum, lhs + rhs) << p << " | " << q;
  }
}

TEST(Session, EvaluationErrors) {
  Session session;
  EXPECT_THROW(session.run("phi(z)"), EvalError);
  Session twice;
  EXPECT_THROW(twice.run("let a = semicircle()\nlet a = semicircle()"), EvalError);
  Session no_joint;
  EXPECT_THROW(no_joint.run("let a = semicircle(); let b = semicircle(); phi(a b)"), EvalError);
  Session overflow(4);
  EXPECT_THROW(overflow.run("let a = semicircle()\nphi(a a a a a)"), EvalError);
  Session domain;
  EXPECT_THROW(domain.run("let p = free_poisson(lambda=-1)"), EvalError);
  Session late;
  EXPECT_THROW(late.run("let a = semicircle()\norder(6)"), EvalError);
}

TEST(Session, StopsAtFirstError) {
  Session session;
  std::vector<std::string> seen;
  try {
    session.run("let a = semicircle(); phi(a a); phi(q); phi(a)", [&](const QueryResult& r) { seen.push_back(r.query); });
    FAIL() << "expected an evaluation error";
  } catch (const EvalError& e) {
    EXPECT_EQ(e.pos().line, 1);
  }
  EXPECT_EQ(seen.size(), 1u);
}

TEST(Session, MomentsAndInfdivQueries) {
  Session session;
  const auto results = session.run(
      "let s1, s2 = semicircle_family(cov=[[2, 1], [1, 1]])\nmoments(s1, s2, order=2)\ninfdiv(s1, s2, degree=2)\n"
      "let b = bernoulli()\ninfdiv(b)");
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[0].json["functional"]["table"]["s1 s2"], "1");
  EXPECT_EQ(results[1].json["report"]["verdict"], "PASS");
  EXPECT_EQ(results[2].json["report"]["verdict"], "FAIL");
}
