#include <gtest/gtest.h>

#include "rmlogic/errors.hpp"
#include "rmlogic/trit.hpp"

using namespace rmlogic;

namespace {
constexpr Trit Z = Trit::Zero, H = Trit::Half, O = Trit::One;
}

TEST(Trit, TableExamples) {
  EXPECT_EQ(join(Z, O), H);
  EXPECT_EQ(dpar(H, Z), O);
  EXPECT_EQ(meet(Z, Z), Z);
  for (Trit x : kAllTrits) EXPECT_EQ(dpar(x, H), H);
}

TEST(Trit, DerivedOps) {
  EXPECT_EQ(neg(O), Z);
  EXPECT_EQ(neg(H), H);
  EXPECT_EQ(flip(O), H);
  EXPECT_EQ(flip(H), O);
  EXPECT_EQ(flip(Z), Z);
  EXPECT_EQ(delta(H), Z);
  for (Trit x : kAllTrits) {
    EXPECT_EQ(neg(x), dpar(H, x));
    EXPECT_EQ(nabla(x), dpar(x, Z));
  }
}

TEST(Trit, MeetPartial) {
  EXPECT_FALSE(meet_partial(Z, O).has_value());
  EXPECT_EQ(meet_partial(H, O), O);
  EXPECT_EQ(meet_partial(H, H), H);
  EXPECT_TRUE(clash(O, Z));
}

TEST(Trit, Orders) {
  EXPECT_TRUE(below(Z, H));
  EXPECT_FALSE(below(H, Z));
  EXPECT_TRUE(below(O, H));
  for (Trit x : kAllTrits) EXPECT_TRUE(sharper(x, x));
  // sharpening order coincides with inclusion on single trits
  for (Trit x : kAllTrits) {
    for (Trit y : kAllTrits) EXPECT_EQ(sharper(x, y), below(x, y));
  }
}

TEST(Trit, JoinLaws) {
  for (Trit x : kAllTrits) {
    EXPECT_EQ(join(x, x), x);
    for (Trit y : kAllTrits) {
      EXPECT_EQ(join(x, y), join(y, x));
      for (Trit z : kAllTrits) EXPECT_EQ(join(join(x, y), z), join(x, join(y, z)));
    }
  }
}

TEST(Trit, Text) {
  EXPECT_EQ(to_char(H), 'h');
  EXPECT_EQ(parse_trit("1/2"), H);
  EXPECT_EQ(parse_trit("1"), O);
  EXPECT_THROW(parse_trit("2"), InputError);
  EXPECT_FALSE(trit_from_char('x').has_value());
}
