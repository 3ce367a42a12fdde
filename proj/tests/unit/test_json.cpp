#include <gtest/gtest.h>

#include <random>

#include "rmlogic/enumerate.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/json_io.hpp"

using namespace rmlogic;

TEST(Json, FormulaSchema) {
  const Json j = to_json(parse("d(h,X1)"));
  EXPECT_EQ(j["op"], "dpar");
  EXPECT_EQ(j["args"][0]["const"], "h");
  EXPECT_EQ(j["args"][1]["var"], "X1");
}

TEST(Json, FormulaRoundTrip) {
  std::mt19937_64 rng(23);
  const auto alpha = FormulaAlphabet::sugared(3);
  for (int k = 0; k < 200; ++k) {
    const Formula f = random_formula(rng, alpha, 12);
    ASSERT_EQ(formula_from_json(Json::parse(to_json(f).dump())), f);
  }
}

TEST(Json, NamedVariables) {
  VarMap map;
  const Formula f = parse_all({"p # X1"}, &map).front();
  EXPECT_EQ(formula_from_json(to_json(f), map), f);
  EXPECT_THROW(formula_from_json(to_json(f)), InputError);
  EXPECT_THROW(formula_from_json(Json{{"op", "dpar"}, {"args", Json::array()}}), InputError);
}

TEST(Json, Verdict) {
  const Verdict v = entails(Theory{parse("X1")}, parse("!X1"));
  const Verdict back = verdict_from_json(to_json(v));
  EXPECT_EQ(back.holds, v.holds);
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_EQ(back.witness->valuation, v.witness->valuation);
}

TEST(Json, Face) {
  const Face f = face_from_word("0h1");
  const Json j = to_json(f);
  EXPECT_EQ(j["word"], "0h1");
  EXPECT_EQ(j["A0"], Json::array({1}));
  EXPECT_EQ(face_from_json(j), f);
  Json bad = j;
  bad["A1"] = Json::array({1});
  EXPECT_THROW(face_from_json(bad), InputError);
}

TEST(Json, Table) { EXPECT_EQ(to_json(TruthTable::from_row("0h1")), (Json{{"m", 1}, {"row", "0h1"}})); }
