#include <gtest/gtest.h>

#include "rmlogic/errors.hpp"
#include "rmlogic/faces.hpp"

using namespace rmlogic;

namespace {
Face f(const char* w) { return face_from_word(w); }
}

TEST(Face, Sets) {
  EXPECT_EQ(f("0h").a0(), std::vector<int>{1});
  EXPECT_TRUE(f("0h").a1().empty());
  EXPECT_EQ(f("hhh").dimension(), 3);
  EXPECT_EQ(Face::from_sets(3, {1}, {3}), f("0h1"));
  EXPECT_THROW(Face::from_sets(2, {1}, {1}), InputError);
  EXPECT_THROW(f("0x"), InputError);
}

TEST(Face, JoinAndIntersect) {
  EXPECT_EQ(join_faces(f("00"), f("01")), f("0h"));
  EXPECT_EQ(join_faces(f("0"), f("1")), f("h"));
  EXPECT_EQ(intersect_faces(f("0h"), f("h1")), f("01"));
  EXPECT_FALSE(intersect_faces(f("0h"), f("1h")).has_value());
  for (const Face& a : all_faces(2)) {
    EXPECT_EQ(join_faces(a, a), a);
    EXPECT_EQ(intersect_faces(a, a), a);
  }
}

TEST(Face, Antipodal) {
  EXPECT_EQ(antipodal(f("h"), f("0")), f("1"));
  EXPECT_EQ(antipodal(f("hh"), f("01")), f("10"));
  for (const Face& b : all_faces(2)) EXPECT_EQ(antipodal(b, b), b);
  EXPECT_THROW(antipodal(f("0h"), f("1h")), PreconditionError);
}

TEST(Face, Dpar) {
  EXPECT_EQ(dpar_faces(f("1"), f("0")), f("1"));
  EXPECT_EQ(dpar_faces(f("h"), f("1")), f("0"));
  for (const Face& x : all_faces(2)) EXPECT_EQ(dpar_faces(x, f("hh")), f("hh"));
}

TEST(Face, WedgeAndCapCurly) {
  EXPECT_EQ(wedge_faces(f("1"), f("0")), f("0"));
  EXPECT_EQ(wedge_faces(f("h"), f("1")), f("h"));
  EXPECT_EQ(cap_curly(f("h"), f("1")), f("1"));
  EXPECT_EQ(cap_curly(f("h"), f("h")), f("h"));
  EXPECT_EQ(cap_curly(f("0"), f("h")), f("0"));
  EXPECT_THROW(cap_curly(f("0"), f("1")), PreconditionError);
}

TEST(Face, Orders) {
  EXPECT_TRUE(is_subface(f("01"), f("0h")));
  EXPECT_FALSE(is_subface(f("0h"), f("01")));
  EXPECT_EQ(farthest_vertex(f("h0")), f("10"));
  EXPECT_EQ(farthest_vertex_by_search(f("h0")), (std::vector<int>{1, 0}));
  EXPECT_FALSE(compatible_faces(f("0h"), f("1h")));
  for (const Face& v : all_faces(2)) {
    if (v.is_vertex()) EXPECT_TRUE(sharper_face(v, f("hh")));
  }
}

TEST(Face, CharacterizationsAgree) {
  for (int n = 1; n <= 3; ++n) {
    const auto faces = all_faces(n);
    for (const Face& a : faces) {
      EXPECT_EQ(word_from_face(farthest_vertex(a)).find('h'), std::string::npos);
      for (const Face& b : faces) {
        const bool s = is_subface(a, b);
        ASSERT_EQ(sharper_face(a, b), s);
        ASSERT_EQ(is_subface_by_vertices(a, b), s);
        ASSERT_EQ(is_subface_by_negation(a, b), s);
        ASSERT_EQ(compatible_faces(a, b), compatible_faces_by_search(a, b));
        ASSERT_EQ(setform::to_face(setform::join(setform::of(a), setform::of(b))), join_faces(a, b));
        const auto i = setform::intersect(setform::of(a), setform::of(b));
        ASSERT_EQ(i.has_value(), intersect_faces(a, b).has_value());
        if (i) ASSERT_EQ(setform::to_face(*i), *intersect_faces(a, b));
        if (s) {
          ASSERT_EQ(setform::to_face(setform::antipodal(setform::of(b), setform::of(a))), antipodal(b, a));
          ASSERT_TRUE(reflection_check(b, a));
        }
      }
    }
  }
}

TEST(Face, Vertices) {
  EXPECT_EQ(vertices(f("h1")).size(), 2u);
  EXPECT_EQ(all_faces(3).size(), 27u);
}
