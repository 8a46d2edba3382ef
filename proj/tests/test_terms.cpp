#include <gtest/gtest.h>

#include "oalg/algebra.hpp"
#include "oalg/builders.hpp"

using namespace oalg;

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_term("x v y ^ z"), parse_term("x v (y ^ z)"));
  EXPECT_EQ(parse_term("x + y * z"), parse_term("x + (y * z)"));
  EXPECT_EQ(parse_term("x' v y"), parse_term("(x') v y"));
  EXPECT_EQ(parse_term("x -> y v z"), parse_term("x -> (y v z)"));
  EXPECT_EQ(parse_term("x o y v z"), parse_term("(x o y) v z"));
  EXPECT_EQ(parse_term("x''"), Term::prime(Term::prime(Term::var("x"))));
}

TEST(Parser, PrintRoundTrip) {
  for (const char* src : {"(x v y') ^ y", "x' v (x ^ y)", "(1 + (1 + x) * y) * y", "x o y -> z", "0 ^ 1'"}) {
    const Term t = parse_term(src);
    EXPECT_EQ(parse_term(to_string(t)), t) << src;
  }
  const Law l = parse_law("x <= y & y <= z => x <= z");
  EXPECT_EQ(parse_law(to_string(l)), l);
  EXPECT_EQ(l.premises.size(), 2u);
}

TEST(Parser, Variables) {
  EXPECT_EQ(variables(parse_term("z v (y ^ x')")), (std::vector<std::string>{"x", "y", "z"}));
  const Law l = parse_law("(x o y) <= z => x <= (y -> z)");
  EXPECT_EQ(variables(l), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(uses_order(l));
  EXPECT_FALSE(uses_order(parse_law("x v x' = 1")));
  EXPECT_TRUE(mentions(parse_term("a -> b"), Connective::Imp));
}

TEST(Parser, ErrorsCarryColumns) {
  try {
    parse_term("x v (y ^ z");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 11u);
  }
  try {
    parse_term("x $ y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_term("x v"), SyntaxError);
  EXPECT_THROW(parse_term("2"), SyntaxError);
  EXPECT_THROW(parse_law("x v y"), SyntaxError);
  EXPECT_THROW(parse_law("x = y =>"), SyntaxError);
}

TEST(Engine, EvaluatesOnChain) {
  const Algebra c = chain_lattice(3);
  Algebra a = with_unary(c, unary_from_names(c, {"1", "a", "0"}));
  EXPECT_EQ(eval_term(a, parse_term("x v y'"), {{"x", 0}, {"y", 0}}), 2u);
  EXPECT_EQ(eval_term(a, parse_term("a ^ 1")), 1u);
  EXPECT_THROW(eval_term(a, parse_term("q")), Error);
}

TEST(Engine, LeastWitness) {
  const Algebra c = with_unary(chain_lattice(3), UnaryTable({2, 1, 0}));
  const Verdict v = check_law(c, "x v x' = 1");
  EXPECT_FALSE(v.holds);
  ASSERT_EQ(v.witness.size(), 1u);
  EXPECT_EQ(v.witness[0].first, "x");
  EXPECT_EQ(c.element(v.witness[0].second), "a");
  EXPECT_EQ(v.checked_count, 2u);
  EXPECT_TRUE(check_law(c, "x'' = x").holds);
  EXPECT_TRUE(check_law(c, "x <= y => y' <= x'").holds);
}

TEST(Engine, Limits) {
  const Algebra c = chain_lattice(2);
  EXPECT_THROW(check_law(c, "x v y v z v w v u = u"), Error);
  EXPECT_TRUE(check_law(c, "x v y v z v w v u = u v w v z v y v x", EngineOptions{5}).holds);
  try {
    check_law(c, "x + y = y + x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MissingOperation);
  }
}
