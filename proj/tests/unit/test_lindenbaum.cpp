#include <gtest/gtest.h>

#include "rmlogic/errors.hpp"
#include "rmlogic/lindenbaum.hpp"

using namespace rmlogic;

namespace {
Formula p(const char* s) { return parse(s); }
}

TEST(Mod, Examples) {
  EXPECT_EQ(mod_set(Theory{p("X1")}, 1).valuations, std::vector<std::uint64_t>{1});
  EXPECT_EQ(mod_set(Theory{}, 1).size(), 3u);
  EXPECT_EQ(mod_set(Theory{p("N X1")}, 1).size(), 0u);
}

TEST(Lind, Examples) {
  const auto a = lind(Theory{p("X1")}, 1);
  ASSERT_TRUE(a.algebra.has_value());
  EXPECT_TRUE(iso_check(*a.algebra, faces_algebra(1)).has_value());
  const auto t = lind(Theory{p("N X1")}, 1);
  EXPECT_EQ(t.algebra->size, 1);
  EXPECT_EQ(*t.algebra, trivial_rm_algebra());
  const auto e = lind(Theory{}, 1);
  EXPECT_EQ(e.algebra->size, 27);
  EXPECT_TRUE(iso_check(*e.algebra, faces_algebra(3)).has_value());
}

TEST(Lind, MatchesFaceCountAtTwoVariables) {
  for (const char* s : {"X1 # X2", "X1", "X1 & X2", "d(X1,X2)"}) {
    const auto l = lind(Theory{p(s)}, 2);
    std::uint64_t want = 1;
    for (std::size_t i = 0; i < l.mod.size(); ++i) want *= 3;
    EXPECT_EQ(l.cardinality, want) << s;
    if (l.algebra) {
      EXPECT_EQ(static_cast<std::uint64_t>(l.algebra->size), want);
      EXPECT_TRUE(iso_check(*l.algebra, faces_algebra(static_cast<int>(l.mod.size()))).has_value()) << s;
    }
  }
}

TEST(BoolLind, Examples) {
  EXPECT_EQ(bool_mod({parse_post("X1")}, 1), std::vector<std::uint64_t>{1});
  EXPECT_EQ(bool_lind({parse_post("X1")}, 1).size, 2);
  const FiniteAlgebra free2 = bool_lind({}, 2);
  EXPECT_EQ(free2.size, 16);
  EXPECT_TRUE(iso_check(free2, powerset_algebra(4)).has_value());
  EXPECT_EQ(bool_lind({parse_post("X1 & !X1")}, 1).size, 1);
  EXPECT_THROW(bool_mod({parse_post("h")}, 1), InputError);
  EXPECT_THROW(bool_mod({parse_post("N X1")}, 1), InputError);
}

TEST(Tables, AllRowsPassAtOneVariable) {
  for (int which : {1, 2}) {
    const auto r = table_correspondence_check(which, 1);
    EXPECT_TRUE(r.pass()) << format_report(r);
    EXPECT_FALSE(r.rows.empty());
  }
}

TEST(Tables, SimplexAtTwoVariables) {
  const auto r = table_correspondence_check(1, 2);
  EXPECT_TRUE(r.pass()) << format_report(r);
}

TEST(Tables, BadArguments) {
  EXPECT_THROW(table_correspondence_check(3, 1), std::invalid_argument);
  EXPECT_THROW(table_correspondence_check(1, 3), std::invalid_argument);
}
