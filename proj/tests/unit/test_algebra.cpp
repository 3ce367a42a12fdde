#include <gtest/gtest.h>

#include "rmlogic/algebra.hpp"
#include "rmlogic/errors.hpp"

using namespace rmlogic;

TEST(Axioms, ZPost) {
  EXPECT_TRUE(check_axioms(z_post(), post_axioms()).pass);
  EXPECT_TRUE(check_axioms(z_rm(), rm_axioms()).pass);
}

TEST(Axioms, InjectedFault) {
  FiniteAlgebra a = z_post();
  a.binops["meet"][1 * 3 + 2] = 2;  // h & 1 := 1
  const auto r = check_axioms(a, post_axioms());
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_FALSE(r.failure->assignment.empty());
  EXPECT_NE(r.failure->lhs_value, r.failure->rhs_value);
  EXPECT_FALSE(describe(post_axioms(), *r.failure, a).empty());
}

TEST(Axioms, SignatureMismatch) { EXPECT_THROW(check_axioms(z_rm(), post_axioms()), InputError); }

TEST(Derive, TablesAndRoundTrips) {
  EXPECT_EQ(derive_post(z_rm()), z_post());
  EXPECT_EQ(derive_rm(z_post()), z_rm());
  const FiniteAlgebra f2 = faces_algebra(2);
  EXPECT_EQ(derive_rm(derive_post(f2)), f2);
  EXPECT_EQ(derive_post(f2), faces_post_algebra(2));
  FiniteAlgebra bad = z_rm();
  bad.binops["join"][0] = 2;
  EXPECT_THROW(derive_post(bad), InvariantError);
}

TEST(Iso, Examples) {
  const auto id = iso_check(faces_algebra(1), z_rm());
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, (std::vector<int>{0, 1, 2}));
  FiniteAlgebra m = z_rm();
  m.binops["join"] = m.binops["meet"];
  EXPECT_FALSE(iso_check(faces_algebra(1), m).has_value());
  EXPECT_TRUE(iso_check(faces_algebra(2), product(z_rm(), z_rm())).has_value());
  EXPECT_THROW(iso_check(faces_algebra(4), faces_algebra(4)).has_value() ? throw PreconditionError("") : void(),
               PreconditionError);
}

TEST(Iso, NonIsomorphicSizes) { EXPECT_FALSE(iso_check(faces_algebra(1), faces_algebra(2)).has_value()); }

TEST(FreeRm, Sizes) {
  EXPECT_EQ(free_rm(1).size(), 27u);
  EXPECT_EQ(free_rm(2).size(), 19683u);
  EXPECT_EQ(rm_closure(free_rm(1).generators()).size(), 27u);
  EXPECT_TRUE(iso_check(free_rm(1).materialize(), faces_algebra(3)).has_value());
}

TEST(AlgebraText, RoundTrip) {
  const FiniteAlgebra a = z_rm();
  EXPECT_EQ(parse_algebra(format_algebra(a)), a);
  const FiniteAlgebra b = parse_algebra("# two elements\ncarrier: 2\nconst zero = 0\nunop neg: 1 0\n");
  EXPECT_EQ(b.size, 2);
  EXPECT_EQ(b.apply("neg", 0), 1);
  EXPECT_THROW(parse_algebra("carrier: 2\nunop neg: 1\n"), InputError);
  EXPECT_THROW(parse_algebra("carrier: 2\nunop neg: 1 5\n"), InputError);
}

TEST(Term, Rendering) {
  EXPECT_EQ(render(Term::binop("join", Term::var(0), Term::var(1))), "join(x, y)");
  EXPECT_EQ(kleene_axioms().equations.size() + 3, post_axioms().equations.size());
}
