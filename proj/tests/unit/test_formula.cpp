#include <gtest/gtest.h>

#include <random>

#include "rmlogic/enumerate.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/formula.hpp"
#include "rmlogic/semantics.hpp"

using namespace rmlogic;

namespace {
const Formula X1 = Formula::var(1), X2 = Formula::var(2), X3 = Formula::var(3);
}

TEST(Parser, Examples) {
  EXPECT_EQ(parse("d(h,X1)"), Formula::dpar(Formula::half(), X1));
  EXPECT_EQ(parse("X1 # !X1"), Formula::join(X1, Formula::neg(X1)));
  EXPECT_EQ(parse("X1 & X2 # X3"), Formula::join(Formula::meet(X1, X2), X3));
  EXPECT_EQ(parse("1/2"), Formula::half());
  EXPECT_EQ(parse("X1 | X2 ~> X3"), Formula::arrow(Formula::vee(X1, X2), X3));
  EXPECT_EQ(parse("T N F X1"), Formula::delta(Formula::nabla(Formula::flip(X1))));
}

TEST(Parser, LeftAssociative) {
  EXPECT_EQ(parse("X1 # X2 # X3"), Formula::join(Formula::join(X1, X2), X3));
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse("X1 #"), ParseError);
  EXPECT_THROW(parse("d(X1)"), ParseError);
  EXPECT_THROW(parse("(X1"), ParseError);
  EXPECT_THROW(parse("X1 $ X2"), ParseError);
  try {
    parse("X1 & & X2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parser, SharedVariableNames) {
  VarMap map;
  const auto fs = parse_all({"p & X2", "q # p"}, &map);
  EXPECT_EQ(map.find("p"), 3);
  EXPECT_EQ(map.find("q"), 4);
  EXPECT_EQ(fs[1].max_var(), 4);
  EXPECT_EQ(map.name_of(2), "X2");
  EXPECT_THROW(parse_with("r", map), InputError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(Formula::dpar(Formula::half(), Formula::zero())), "d(h,0)");
  EXPECT_EQ(render(desugar(Formula::neg(X1))), "d(h,X1)");
  EXPECT_EQ(render(Formula::one(), RenderStyle::Sugared), "1");
}

TEST(Desugar, Examples) {
  EXPECT_EQ(desugar(Formula::nabla(X1)), Formula::dpar(X1, Formula::zero()));
  EXPECT_EQ(desugar(Formula::flip(X1)),
            Formula::join(Formula::dpar(X1, Formula::zero()),
                          Formula::dpar(Formula::dpar(Formula::zero(), X1), Formula::zero())));
  EXPECT_EQ(desugar(Formula::zero()), Formula::zero());
  EXPECT_TRUE(desugar(Formula::arrow(X1, X2)).is_core());
}

TEST(Desugar, PreservesTablesAndRoundTrips) {
  std::mt19937_64 rng(3);
  const auto alpha = FormulaAlphabet::sugared(2);
  for (int k = 0; k < 500; ++k) {
    const Formula f = random_formula(rng, alpha, 15);
    const Formula d = desugar(f);
    ASSERT_TRUE(d.is_core());
    ASSERT_EQ(table(d, 2), table(f, 2)) << render(f);
    ASSERT_EQ(parse(render(f)), f) << render(f);
    ASSERT_EQ(table(resugar(d), 2), table(f, 2)) << render(f);
  }
}

TEST(Substitute, ReplacesVariables) {
  const Formula f = substitute(parse("X1 # X2"), {parse("!X2"), parse("h")});
  EXPECT_EQ(f, parse("!X2 # h"));
}

TEST(Enumerate, CountsAndOrder) {
  const auto fs = enumerate_formulas(FormulaAlphabet::core(1), 3);
  // size 1: 0, h, X1; size 3: 3 connectives * 3 * 3
  EXPECT_EQ(fs.size(), 3u + 27u);
  for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_LE(fs[i - 1].size(), fs[i].size());
}

TEST(PostFormula, ParseAndRender) {
  const PostFormula p = parse_post("N X1 | !N X1");
  EXPECT_EQ(p.op(), PostOp::Vee);
  EXPECT_EQ(parse_post(render(p)), p);
  EXPECT_EQ(parse_post("T X1"), PostFormula::neg(PostFormula::nabla(PostFormula::neg(PostFormula::var(1)))));
  EXPECT_THROW(parse_post("X1 # X2"), InputError);
}
