#include <gtest/gtest.h>

#include <random>

#include "rmlogic/errors.hpp"
#include "rmlogic/truth_table.hpp"

using namespace rmlogic;

TEST(Valuation, IndexOrder) {
  const Valuation v(2, 5);  // 5 = 1*3 + 2
  EXPECT_EQ(v.word(), "h1");
  EXPECT_EQ(v.at(1), Trit::Half);
  EXPECT_EQ(Valuation({Trit::Half, Trit::One}).index(), 5u);
  EXPECT_EQ(Valuation(1, 0).assignment(), "X1=0");
}

TEST(TruthTable, Coordinates) {
  EXPECT_EQ(TruthTable::coordinate(1, 1).row(), "0h1");
  EXPECT_EQ(TruthTable::coordinate(2, 2).row(), "0h10h10h1");
  EXPECT_EQ(TruthTable::coordinate(2, 1).row(), "000hhh111");
}

TEST(TruthTable, TextRoundTrip) {
  const TruthTable t = TruthTable::from_row("0h1hh0110");
  EXPECT_EQ(t.arity(), 2);
  EXPECT_EQ(TruthTable::parse_text(t.to_text()), t);
  EXPECT_THROW(TruthTable::from_row("0h"), InputError);
  EXPECT_THROW(TruthTable::from_row("0hx"), InputError);
}

TEST(TruthTable, CodeRoundTrip) {
  for (std::uint64_t c = 0; c < 27; ++c) EXPECT_EQ(TruthTable::from_code(1, c).code(), c);
  EXPECT_EQ(TruthTable::from_row("001").code(), 2u);
  EXPECT_EQ(TruthTable::from_row("100").code(), 18u);
}

// Packed plane operations agree with the scalar tables, including across word
// boundaries.
TEST(TruthTable, PlanesMatchScalar) {
  std::mt19937_64 rng(11);
  for (int m : {1, 3, 4, 5}) {
    TruthTable a(m), b(m);
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      a.set(i, trit_from_index(static_cast<int>(rng() % 3)));
      b.set(i, trit_from_index(static_cast<int>(rng() % 3)));
    }
    const TruthTable j = join(a, b), d = dpar(a, b), mt = meet(a, b), v = vee(a, b), n = neg(a), na = nabla(a),
                     de = delta(a);
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(j[i], join(a[i], b[i]));
      ASSERT_EQ(d[i], dpar(a[i], b[i]));
      ASSERT_EQ(mt[i], meet(a[i], b[i]));
      ASSERT_EQ(v[i], vee(a[i], b[i]));
      ASSERT_EQ(n[i], neg(a[i]));
      ASSERT_EQ(na[i], nabla(a[i]));
      ASSERT_EQ(de[i], delta(a[i]));
    }
    EXPECT_EQ(a.count(Trit::Zero) + a.count(Trit::Half) + a.count(Trit::One), a.size());
  }
}

TEST(TruthTable, PartialMeetAndOrder) {
  const TruthTable x = TruthTable::coordinate(1, 1);
  EXPECT_FALSE(meet_partial(x, neg(x)).has_value());
  EXPECT_EQ(first_clash(x, neg(x)), 0u);
  EXPECT_TRUE(below(x, join(x, TruthTable(1))));
  EXPECT_EQ(first_not_below(join(x, TruthTable(1)), x), 2u);
}

TEST(TruthTable, ExtendArity) {
  const TruthTable e = extend_arity(TruthTable::coordinate(1, 1), 2);
  EXPECT_EQ(e, TruthTable::coordinate(2, 1));
}

TEST(TruthTable, ArityBound) { EXPECT_THROW(pow3(kMaxArity + 1), ArityError); }
