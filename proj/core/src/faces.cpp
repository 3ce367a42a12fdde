#include "rmlogic/faces.hpp"

#include <algorithm>
#include <set>

#include "rmlogic/errors.hpp"
#include "rmlogic/truth_table.hpp"

namespace rmlogic {

namespace {

void same_n(const Face& a, const Face& b) {
  if (a.n() != b.n()) {
    throw InputError("dimension mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

template <typename Fn>
Face pointwise(const Face& a, const Face& b, Fn fn) {
  same_n(a, b);
  std::vector<Trit> w(a.word().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = fn(a[i], b[i]);
  return Face(std::move(w));
}

std::vector<int> indices_with(const Face& f, Trit t) {
  std::vector<int> out;
  for (int i = 0; i < f.n(); ++i) {
    if (f[static_cast<std::size_t>(i)] == t) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

Face Face::from_sets(int n, const std::vector<int>& a0, const std::vector<int>& a1) {
  std::vector<Trit> w(static_cast<std::size_t>(n), Trit::Half);
  auto place = [&](const std::vector<int>& idx, Trit t) {
    for (int i : idx) {
      if (i < 1 || i > n) throw InputError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n));
      auto& slot = w[static_cast<std::size_t>(i - 1)];
      if (slot != Trit::Half) throw InputError("coordinate " + std::to_string(i) + " is in both A0 and A1");
      slot = t;
    }
  };
  place(a0, Trit::Zero);
  place(a1, Trit::One);
  return Face(std::move(w));
}

std::vector<int> Face::a0() const { return indices_with(*this, Trit::Zero); }
std::vector<int> Face::a1() const { return indices_with(*this, Trit::One); }

int Face::dimension() const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), Trit::Half));
}

std::string Face::text() const { return word_from_face(*this); }

Face face_from_word(std::string_view w) {
  std::vector<Trit> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto t = trit_from_char(w[i]);
    if (!t) throw InputError("bad face character '" + std::string(1, w[i]) + "' at position " + std::to_string(i));
    out.push_back(*t);
  }
  return Face(std::move(out));
}

std::string word_from_face(const Face& f) {
  std::string s;
  for (Trit t : f.word()) s += to_char(t);
  return s;
}

Face join_faces(const Face& a, const Face& b) { return pointwise(a, b, [](Trit x, Trit y) { return join(x, y); }); }

std::optional<Face> intersect_faces(const Face& a, const Face& b) {
  same_n(a, b);
  std::vector<Trit> w(a.word().size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto c = meet_partial(a[i], b[i]);
    if (!c) return std::nullopt;
    w[i] = *c;
  }
  return Face(std::move(w));
}

Face antipodal(const Face& b, const Face& a) {
  if (!is_subface(a, b)) throw PreconditionError("antipodal: " + a.text() + " is not a subface of " + b.text());
  return pointwise(b, a, [](Trit bi, Trit ai) { return bi == Trit::Half ? neg(ai) : bi; });
}

Face dpar_faces(const Face& x, const Face& y) { return antipodal(join_faces(x, y), y); }

Face wedge_faces(const Face& x, const Face& y) {
  same_n(x, y);
  const Face o = Face::origin(x.n());
  auto step = [](const std::optional<Face>& a, const Face& b) -> std::optional<Face> {
    return a ? intersect_faces(*a, b) : std::nullopt;
  };
  auto r = step(step(join_faces(o, x), join_faces(o, y)), join_faces(x, y));
  if (!r) throw InvariantError("wedge: intersection of " + x.text() + " and " + y.text() + " is empty");
  return *r;
}

Face cap_curly(const Face& a, const Face& b) {
  if (!compatible_faces(a, b)) throw PreconditionError("cap_curly: " + a.text() + " and " + b.text() + " clash");
  return pointwise(a, b, [](Trit x, Trit y) {
    const Trit left = meet(meet(Trit::Half, nabla(meet(x, neg(x)))), nabla(meet(y, neg(y))));
    return vee(left, neg(nabla(meet(neg(x), neg(y)))));
  });
}

bool is_subface(const Face& a, const Face& b) { return join_faces(a, b) == b; }

bool sharper_face(const Face& a, const Face& b) {
  same_n(a, b);
  for (std::size_t i = 0; i < a.word().size(); ++i) {
    if (!sharper(a[i], b[i])) return false;
  }
  return true;
}

bool is_subface_by_vertices(const Face& a, const Face& b) {
  same_n(a, b);
  const Face o = Face::origin(a.n());
  const Face one = dpar_faces(Face::whole(a.n()), o);
  return is_subface(dpar_faces(a, o), b) && is_subface(dpar_faces(a, one), b);
}

bool is_subface_by_negation(const Face& a, const Face& b) {
  same_n(a, b);
  const Face o = Face::origin(a.n());
  const Face one = dpar_faces(Face::whole(a.n()), o);
  const Face whole = Face::whole(a.n());
  auto neg_face = [&](const Face& f) { return dpar_faces(whole, f); };
  return join_faces(neg_face(dpar_faces(a, o)), b) == whole && join_faces(neg_face(dpar_faces(a, one)), b) == whole;
}

std::vector<std::vector<int>> vertices(const Face& f) {
  std::vector<std::vector<int>> out{{}};
  for (Trit t : f.word()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      for (int bit = 0; bit <= 1; ++bit) {
        if (t != Trit::Half && bit != (t == Trit::One ? 1 : 0)) continue;
        auto q = p;
        q.push_back(bit);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

Face farthest_vertex(const Face& x) { return dpar_faces(x, Face::origin(x.n())); }

std::vector<int> farthest_vertex_by_search(const Face& x) {
  std::vector<int> best;
  int best_d = -1;
  for (const auto& v : vertices(x)) {
    const int d = static_cast<int>(std::count(v.begin(), v.end(), 1));
    if (d > best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

bool compatible_faces(const Face& a, const Face& b) {
  same_n(a, b);
  for (std::size_t i = 0; i < a.word().size(); ++i) {
    if (clash(a[i], b[i])) return false;
  }
  return true;
}

bool compatible_faces_by_search(const Face& a, const Face& b) {
  same_n(a, b);
  for (const auto& c : all_faces(a.n())) {
    if (join_faces(c, a) == a && join_faces(c, b) == b) return true;
  }
  return false;
}

std::vector<Face> all_faces(int n) {
  const auto count = pow3(n);
  std::vector<Face> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(Valuation(n, i).digits());
  return out;
}

namespace setform {

namespace {

std::vector<int> set_op(const std::vector<int>& a, const std::vector<int>& b, int kind) {
  std::vector<int> out;
  if (kind == 0) std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (kind == 1) std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (kind == 2) std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> cap(const std::vector<int>& a, const std::vector<int>& b) { return set_op(a, b, 0); }
std::vector<int> cup(const std::vector<int>& a, const std::vector<int>& b) { return set_op(a, b, 1); }
std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) { return set_op(a, b, 2); }

}  // namespace

SetFace of(const Face& f) { return {f.n(), f.a0(), f.a1()}; }
Face to_face(const SetFace& s) { return Face::from_sets(s.n, s.a0, s.a1); }

SetFace join(const SetFace& a, const SetFace& b) { return {a.n, cap(a.a0, b.a0), cap(a.a1, b.a1)}; }

std::optional<SetFace> intersect(const SetFace& a, const SetFace& b) {
  if (!cap(a.a0, b.a1).empty() || !cap(a.a1, b.a0).empty()) return std::nullopt;
  return SetFace{a.n, cup(a.a0, b.a0), cup(a.a1, b.a1)};
}

SetFace antipodal(const SetFace& b, const SetFace& a) {
  return {b.n, cup(b.a0, minus(a.a1, b.a1)), cup(b.a1, minus(a.a0, b.a0))};
}

}  // namespace setform

bool reflection_check(const Face& b, const Face& a) {
  const Face r = antipodal(b, a);
  std::set<std::vector<int>> reflected;
  for (const auto& v : vertices(a)) {
    std::vector<int> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int center2 = static_cast<int>(index_of(b[i]));  // doubled center: 0, 1 or 2
      p[i] = 2 * center2 - 2 * v[i];
    }
    reflected.insert(p);
  }
  std::set<std::vector<int>> expected;
  for (const auto& v : vertices(r)) {
    std::vector<int> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = 2 * v[i];
    expected.insert(p);
  }
  return reflected == expected;
}

}  // namespace rmlogic
