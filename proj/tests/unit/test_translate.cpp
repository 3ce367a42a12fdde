#include <gtest/gtest.h>

#include <random>

#include "rmlogic/enumerate.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/semantics.hpp"
#include "rmlogic/translate.hpp"

using namespace rmlogic;

TEST(ToRm, Examples) {
  EXPECT_EQ(render(to_rm(parse_post("!X1"))), "d(h,X1)");
  EXPECT_EQ(render(to_rm(parse_post("N X1"))), "d(X1,0)");
  const Formula v = to_rm(parse_post("X1 | X2"));
  EXPECT_EQ(table(v, 2), table(parse("d(h, d(h,X1) & d(h,X2))"), 2));
  EXPECT_TRUE(v.is_core());
}

TEST(ToPost, Examples) {
  EXPECT_EQ(to_post(parse("d(X1,0)")), parse_post("N X1"));
  EXPECT_EQ(to_post(parse("X1 & X2")), parse_post("X1 & X2"));
  EXPECT_EQ(to_post(parse("h")), PostFormula::half());
}

TEST(Translate, PreservesTables) {
  std::mt19937_64 rng(5);
  const auto alpha = FormulaAlphabet::sugared(2);
  for (int k = 0; k < 300; ++k) {
    const Formula f = random_formula(rng, alpha, 12);
    ASSERT_EQ(table(to_post(f), 2), table(f, 2)) << render(f);
    const PostFormula p = random_post_formula(rng, 2, 12);
    ASSERT_EQ(table(to_rm(p), 2), table(p, 2)) << render(p);
  }
}

TEST(Translate, JoinAndDparTerms) {
  EXPECT_EQ(table(join_post_term(), 2), table(parse("X1 # X2"), 2));
  EXPECT_EQ(table(dpar_post_term(), 2), table(parse("d(X1,X2)"), 2));
}

TEST(Synthesize, Examples) {
  EXPECT_TRUE(equivalent(synthesize(TruthTable::from_row("0h1")), Formula::var(1)));
  EXPECT_TRUE(equivalent(synthesize(TruthTable::from_row("hhh")), Formula::half()));
  EXPECT_EQ(table(synthesize(TruthTable::from_row("011")), 1).row(), "011");
  EXPECT_EQ(synthesize(TruthTable::from_row("000")), Formula::zero());
  EXPECT_THROW(synthesize(TruthTable(0)), PreconditionError);
}

TEST(Synthesize, AllUnaryAndSampledBinary) {
  for (std::uint64_t c = 0; c < 27; ++c) {
    const TruthTable t = TruthTable::from_code(1, c);
    ASSERT_EQ(table(synthesize(t), 1), t);
  }
  for (std::uint64_t c = 0; c < 19683; c += 97) {
    const TruthTable t = TruthTable::from_code(2, c);
    ASSERT_EQ(table(synthesize(t), 2), t);
  }
}

TEST(Eq3Literal, MismatchCells) {
  const auto mm = eq3_mismatches();
  ASSERT_EQ(mm.size(), 2u);
  EXPECT_EQ(mm[0].x, Trit::Half);
  EXPECT_EQ(mm[0].y, Trit::Zero);
  EXPECT_EQ(mm[0].actual, Trit::Zero);
  EXPECT_EQ(mm[1].x, Trit::One);
  EXPECT_EQ(mm[1].y, Trit::Zero);
}
