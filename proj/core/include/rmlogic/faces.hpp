#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmlogic/trit.hpp"

namespace rmlogic {

/// Nonempty face of the n-cube, stored as its word in {0,h,1}^n. Coordinate
/// i is fixed to 0 (i in A0), fixed to 1 (i in A1), or free (h).
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<Trit> word) : word_(std::move(word)) {}
  /// Builds a face from its coordinate sets (1-based). Throws InputError if
  /// they overlap or leave {1..n}.
  static Face from_sets(int n, const std::vector<int>& a0, const std::vector<int>& a1);
  static Face whole(int n) { return Face(std::vector<Trit>(static_cast<std::size_t>(n), Trit::Half)); }
  static Face origin(int n) { return Face(std::vector<Trit>(static_cast<std::size_t>(n), Trit::Zero)); }

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<Trit>& word() const { return word_; }
  Trit operator[](std::size_t i) const { return word_[i]; }
  /// Sorted 1-based index sets.
  std::vector<int> a0() const;
  std::vector<int> a1() const;
  int dimension() const;
  bool is_vertex() const { return dimension() == 0; }
  std::string text() const;

  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Trit> word_;
};

Face face_from_word(std::string_view w);
std::string word_from_face(const Face& f);

/// Smallest face containing both.
Face join_faces(const Face& a, const Face& b);
/// Intersection; nullopt when it is empty.
std::optional<Face> intersect_faces(const Face& a, const Face& b);
/// Face antipodal to a inside b. Throws PreconditionError unless a is a
/// subface of b.
Face antipodal(const Face& b, const Face& a);
Face dpar_faces(const Face& x, const Face& y);
/// (0 # x) cap (0 # y) cap (x # y), with 0 the origin vertex. Each
/// intersection is checked to exist; InvariantError otherwise.
Face wedge_faces(const Face& x, const Face& y);
/// (h & N(a & !a) & N(b & !b)) | !N(!a & !b), pointwise. Throws
/// PreconditionError for incompatible faces.
Face cap_curly(const Face& a, const Face& b);

bool is_subface(const Face& a, const Face& b);
/// Pointwise a <= b <= !b or a >= b >= !b.
bool sharper_face(const Face& a, const Face& b);
/// Subface characterizations: d(a,0) and d(a,1) below b; and the form with
/// !d(a,0) # b == h and !d(a,1) # b == h.
bool is_subface_by_vertices(const Face& a, const Face& b);
bool is_subface_by_negation(const Face& a, const Face& b);

std::vector<std::vector<int>> vertices(const Face& f);
/// d(x, origin).
Face farthest_vertex(const Face& x);
/// Vertex of x with the most coordinates equal to 1, by search.
std::vector<int> farthest_vertex_by_search(const Face& x);

/// No coordinate where one face is 0 and the other 1.
bool compatible_faces(const Face& a, const Face& b);
/// Some face c with c # a == a and c # b == b, by enumerating all faces.
bool compatible_faces_by_search(const Face& a, const Face& b);

/// All 3^n faces in word-index order.
std::vector<Face> all_faces(int n);

/// Set-pair formulas, kept separate from the pointwise versions above so the
/// two can be checked against each other.
namespace setform {
struct SetFace {
  int n = 0;
  std::vector<int> a0;
  std::vector<int> a1;
};
SetFace of(const Face& f);
Face to_face(const SetFace& s);
/// (A0 cap B0, A1 cap B1).
SetFace join(const SetFace& a, const SetFace& b);
/// (A0 cup B0, A1 cup B1) when A0 cap B1 and A1 cap B0 are empty.
std::optional<SetFace> intersect(const SetFace& a, const SetFace& b);
/// (B0 cup (A1 \ B1), B1 cup (A0 \ B0)).
SetFace antipodal(const SetFace& b, const SetFace& a);
}  // namespace setform

/// Vertex set of antipodal(b, a) equals the reflection of the vertices of a
/// through the center of b (coordinates doubled to stay integral).
bool reflection_check(const Face& b, const Face& a);

}  // namespace rmlogic
