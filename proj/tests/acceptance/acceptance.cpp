// Acceptance criteria 1-11, one PASS/FAIL line each.
//
// Oracles below work on doubled integer values (0, 1, 2 for 0, 1/2, 1) and
// on literal table strings, independent of the library's Trit tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rmlogic/algebra.hpp"
#include "rmlogic/clone.hpp"
#include "rmlogic/enumerate.hpp"
#include "rmlogic/faces.hpp"
#include "rmlogic/lindenbaum.hpp"
#include "rmlogic/semantics.hpp"
#include "rmlogic/translate.hpp"

using namespace rmlogic;

namespace {

// Criteria that cannot pass against this implementation because the stated
// property is false; see the detail printed for each.
const std::set<int> kKnownUnattainable{4};

constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr int kRandomPairsM2 = 10000;
constexpr int kRandomPost = 1000;
constexpr std::size_t kRandomPostSize = 12;
constexpr int kCompactnessCases = 1000;
constexpr std::size_t kMaxPremises = 20;

// -- integer oracle ---------------------------------------------------------

int iv(Trit t) { return index_of(t); }
Trit tv(int i) { return trit_from_index(i); }

const char* kJoinRows[3] = {"0hh", "hhh", "hh1"};
const char* kDparRows[3] = {"0h0", "1h0", "1h1"};
const char* kCapRows[3] = {"00-", "0h1", "-11"};

int sym(char c) { return c == '0' ? 0 : c == 'h' ? 1 : c == '1' ? 2 : -1; }
int o_join(int x, int y) { return sym(kJoinRows[x][y]); }
int o_dpar(int x, int y) { return sym(kDparRows[x][y]); }
int o_neg(int x) { return 2 - x; }
int o_nabla(int x) { return std::min(2, 2 * x); }
int o_delta(int x) { return std::max(0, 2 * x - 2); }
int o_min(int x, int y) { return std::min(x, y); }
int o_max(int x, int y) { return std::max(x, y); }

int post_value(const PostFormula& f, const std::vector<int>& v) {
  switch (f.op()) {
    case PostOp::Const0: return 0;
    case PostOp::ConstHalf: return 1;
    case PostOp::Const1: return 2;
    case PostOp::Var: return v[static_cast<std::size_t>(f.index() - 1)];
    case PostOp::Neg: return o_neg(post_value(f.operand(), v));
    case PostOp::Nabla: return o_nabla(post_value(f.operand(), v));
    case PostOp::Vee: return o_max(post_value(f.lhs(), v), post_value(f.rhs(), v));
    case PostOp::Meet: return o_min(post_value(f.lhs(), v), post_value(f.rhs(), v));
  }
  return -1;
}

std::vector<int> digits(int m, std::uint64_t idx) {
  std::vector<int> d(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(idx % 3);
    idx /= 3;
  }
  return d;
}

bool oracle_post_tautology(const PostFormula& f, int m) {
  std::uint64_t n = 1;
  for (int i = 0; i < m; ++i) n *= 3;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (post_value(f, digits(m, i)) != 2) return false;
  }
  return true;
}

// Goal b follows from premise a: at every cell b is 1/2 or equals a.
bool oracle_follows(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 1 && b[i] != a[i]) return false;
  }
  return true;
}

std::vector<int> ints(const TruthTable& t) {
  std::vector<int> r;
  for (Trit x : t.values()) r.push_back(iv(x));
  return r;
}

// -- reporting ---------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Counter {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++bad_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome outcome(const std::string& summary) const {
    if (bad_ == 0) return {true, summary + ", " + std::to_string(total_) + " checks"};
    return {false, std::to_string(bad_) + "/" + std::to_string(total_) + " failed, first: " + first_};
  }

 private:
  long total_ = 0;
  long bad_ = 0;
  std::string first_;
};

Formula constant(int x) { return x == 0 ? Formula::zero() : x == 1 ? Formula::half() : Formula::one(); }

std::string cell(int x, int y) {
  return std::string("(") + "0h1"[x] + "," + "0h1"[y] + ")";
}

// -- criteria ------------------------------------------------------------------

Outcome c1_tables() {
  Counter c;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      c.check(iv(join(tv(x), tv(y))) == o_join(x, y), "join " + cell(x, y));
      c.check(iv(dpar(tv(x), tv(y))) == o_dpar(x, y), "dpar " + cell(x, y));
      const auto m = meet_partial(tv(x), tv(y));
      const int want = sym(kCapRows[x][y]);
      c.check(want < 0 ? !m.has_value() : (m && iv(*m) == want), "intersection " + cell(x, y));
    }
  }
  return c.outcome("27 cells bit-exact");
}

Outcome c2_equations() {
  Counter c;
  for (int x = 0; x < 3; ++x) {
    const Trit X = tv(x);
    c.check(iv(neg(X)) == o_neg(x), "neg");
    c.check(iv(nabla(X)) == o_nabla(x), "nabla");
    c.check(iv(delta(X)) == o_delta(x), "delta");
    c.check(iv(delta(X)) == o_neg(o_nabla(o_neg(x))), "delta = !N!");
    // definitions through the antipodal operation
    c.check(iv(neg(X)) == o_dpar(1, x), "neg = d(h,x)");
    c.check(iv(nabla(X)) == o_dpar(x, 0), "nabla = d(x,0)");
    c.check(o_dpar(1, 0) == 2, "1 = d(h,0)");
    c.check(iv(flip(X)) == o_join(o_dpar(x, 0), o_dpar(o_dpar(0, x), 0)), "flip term");
    for (int y = 0; y < 3; ++y) {
      const Trit Y = tv(y);
      c.check(iv(meet(X, Y)) == o_min(x, y), "meet " + cell(x, y));
      c.check(iv(vee(X, Y)) == o_max(x, y), "vee " + cell(x, y));
      c.check(iv(vee(X, Y)) == o_neg(o_min(o_neg(x), o_neg(y))), "vee via De Morgan " + cell(x, y));
      // antipodal operation from Post operations
      const int d4 = o_max(o_max(o_min(o_min(1, o_nabla(y)), o_nabla(o_neg(y))), o_min(o_delta(x), o_delta(y))),
                           o_min(o_nabla(x), o_delta(o_neg(y))));
      c.check(iv(dpar(X, Y)) == d4, "dpar Post term " + cell(x, y));
      // conjunction through three joins with the origin
      const int l = o_join(0, x), r = o_join(0, y), s = o_join(x, y);
      const int w = sym(kCapRows[sym(kCapRows[l][r])][s]);
      c.check(w == o_min(x, y), "wedge " + cell(x, y));
      const Face fw = wedge_faces(Face({X}), Face({Y}));
      c.check(iv(fw[0]) == o_min(x, y), "wedge_faces " + cell(x, y));
      // intersection formula on compatible pairs
      const int cap = sym(kCapRows[x][y]);
      if (cap >= 0) {
        const int curly = o_max(o_min(o_min(1, o_nabla(o_min(x, o_neg(x)))), o_nabla(o_min(y, o_neg(y)))),
                                o_neg(o_nabla(o_min(o_neg(x), o_neg(y)))));
        c.check(curly == cap, "intersection formula " + cell(x, y));
        c.check(iv(cap_curly(Face({X}), Face({Y}))[0]) == cap, "cap_curly " + cell(x, y));
        const Formula mf = meet_formula(constant(x), constant(y));
        c.check(iv(eval(mf, Valuation(std::vector<Trit>{}))) == cap, "meet_formula " + cell(x, y));
      }
    }
  }
  c.check(iv(flip(Trit::Zero)) == 0 && iv(flip(Trit::Half)) == 2 && iv(flip(Trit::One)) == 1, "flip values");
  return c.outcome("all equations hold on {0,h,1}");
}

Outcome c3_eq3() {
  const auto mm = eq3_mismatches();
  std::string cells;
  std::set<std::pair<int, int>> got;
  bool consistent = true;
  for (const auto& m : mm) {
    cells += (cells.empty() ? "" : " ") + cell(iv(m.x), iv(m.y)) + " expected " + to_char(m.expected) + " got " +
             to_char(m.actual);
    got.insert({iv(m.x), iv(m.y)});
    consistent = consistent && iv(m.expected) == o_join(iv(m.x), iv(m.y));
  }
  // The literal term, evaluated independently.
  std::set<std::pair<int, int>> oracle;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const int t = o_max(o_max(o_min(o_min(o_neg(o_nabla(y)), o_nabla(y)), 1), o_min(o_delta(y), o_max(1, o_delta(x)))),
                          o_dpar(0, y));
      if (t != o_join(x, y)) oracle.insert({x, y});
    }
  }
  const bool column = got.count({1, 0}) && got.count({2, 0});
  const bool pass = !mm.empty() && column && consistent && got == oracle;
  return {pass, "mismatches reported: " + (cells.empty() ? std::string("none") : cells)};
}

Outcome c4_clone() {
  const Clone c({"0", "h", "join", "dpar"});
  const bool shapes_refuted = !join_shape_for_min() && !dpar_shape_for_min();
  const auto term = c.term_for(named_op("meet"));
  std::string detail = "closure size " + std::to_string(c.size()) + " after " + std::to_string(c.rounds()) +
                       " rounds; both proof shapes " + (shapes_refuted ? "refuted" : "REALIZED");
  if (term) {
    // Confirm the witness independently on all nine cells.
    const Formula w = parse("d(X1 # X2, d(h,0)) # d(X1 # 0, d(h, d(X2,0)))");
    bool agrees = true;
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        const int v = o_join(o_dpar(o_join(x, y), o_dpar(1, 0)), o_dpar(o_join(x, 0), o_dpar(1, o_dpar(y, 0))));
        agrees = agrees && v == o_min(x, y) && iv(eval(w, Valuation({tv(x), tv(y)}))) == v;
      }
    }
    detail += "; min IS in the closure: " + *term + (agrees ? " (witness d(X1 # X2, d(h,0)) # d(X1 # 0, "
                                                              "d(h, d(X2,0))) equals x & y on all 9 cells)"
                                                            : " (witness check failed)");
  }
  return {!term && shapes_refuted, detail};
}

Outcome c5_consequence() {
  Counter c;
  auto agree = [&](const TruthTable& a, const TruthTable& b) {
    const Formula fa = synthesize(a), fb = synthesize(b);
    const int m = a.arity();
    const bool o = oracle_follows(ints(a), ints(b));
    const Theory t{fa};
    const std::string what = a.row() + " => " + b.row();
    c.check(table(fa, m) == a && table(fb, m) == b, "synthesize " + what);
    c.check(entails(t, fb, m).holds == o, "entails " + what);
    c.check(entails_via_meet(t, fb, m).holds == o, "via meet " + what);
    c.check(entails_via_reduction(fa, fb) == o, "via reduction " + what);
    c.check(below(a, b) == o, "pointwise " + what);
  };
  for (std::uint64_t i = 0; i < 27; ++i) {
    for (std::uint64_t j = 0; j < 27; ++j) agree(TruthTable::from_code(1, i), TruthTable::from_code(1, j));
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> code(0, 19682);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int k = 0; k < kRandomPairsM2; ++k) {
    const TruthTable a = TruthTable::from_code(2, code(rng));
    TruthTable b = TruthTable::from_code(2, code(rng));
    // Random pairs almost never entail; weaken b towards a to hit both sides.
    if (coin(rng) == 0) {
      for (std::uint64_t v = 0; v < 9; ++v) {
        if (b.get(v) != Trit::Half && coin(rng) != 0) b.set(v, a.get(v));
      }
    }
    agree(a, b);
  }
  return c.outcome("729 pairs at m=1, " + std::to_string(kRandomPairsM2) + " random pairs at m=2");
}

Outcome c6_orders() {
  Counter c;
  for (int n = 1; n <= 4; ++n) {
    const auto faces = all_faces(n);
    for (const Face& a : faces) {
      std::set<std::vector<int>> va;
      for (const auto& v : vertices(a)) va.insert(v);
      bool minimal = true;
      for (const Face& b : faces) {
        std::set<std::vector<int>> vb;
        for (const auto& v : vertices(b)) vb.insert(v);
        const bool inclusion = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
        c.check(is_subface(a, b) == inclusion, "subface " + a.text() + " " + b.text());
        c.check(sharper_face(a, b) == inclusion, "sharper " + a.text() + " " + b.text());
        if (!(b == a) && sharper_face(b, a)) minimal = false;
      }
      bool boolean = true;
      for (Trit t : a.word()) boolean = boolean && is_boolean(t);
      c.check(minimal == boolean && boolean == (va.size() == 1), "minimal " + a.text());
    }
  }
  return c.outcome("n = 1..4");
}

Outcome c7_reduction() {
  Counter c;
  auto one = [&](const PostFormula& b) {
    const bool o = oracle_post_tautology(b, std::max(1, b.max_var()));
    c.check(post_tautology(b) == o, "post_tautology " + render(b));
    c.check(is_tautology(reduce_post_to_rm(b)) == o, "reduction " + render(b));
  };
  const auto all = enumerate_post_formulas(2, 5);
  for (const auto& b : all) one(b);
  std::mt19937_64 rng(kSeed + 7);
  for (int k = 0; k < kRandomPost; ++k) one(random_post_formula(rng, 2, kRandomPostSize));
  return c.outcome(std::to_string(all.size()) + " formulas of size <= 5, " + std::to_string(kRandomPost) +
                   " random of size <= " + std::to_string(kRandomPostSize));
}

Outcome c8_representation() {
  Counter c;
  const FreeRm f = free_rm(1);
  c.check(f.size() == 27, "free_rm(1) size");
  c.check(rm_closure(f.generators()).size() == 27, "generated by X1");
  const Lindenbaum empty = lind(Theory{}, 1);
  c.check(empty.algebra && iso_check(*empty.algebra, faces_algebra(3)).has_value(), "lind(empty,1) ~ F_3");
  const Lindenbaum x1 = lind(Theory{Formula::var(1)}, 1);
  c.check(x1.mod.size() == 1 && x1.algebra && iso_check(*x1.algebra, faces_algebra(1)).has_value(),
          "lind({X1},1) ~ F_1");
  const Lindenbaum none = lind(Theory{Formula::one()}, 1);
  c.check(none.mod.size() == 0 && none.cardinality == 1 && none.algebra && none.algebra->size == 1,
          "empty Mod gives one element");
  return c.outcome("27 elements, isomorphisms found");
}

Outcome c9_compactness() {
  Counter c;
  std::mt19937_64 rng(kSeed + 9);
  const FormulaAlphabet alpha1 = FormulaAlphabet::sugared(1), alpha2 = FormulaAlphabet::sugared(2);
  int explosive = 0;
  std::size_t largest = 0;
  for (int k = 0; k < kCompactnessCases; ++k) {
    const int m = 1 + static_cast<int>(rng() % 2);
    const std::size_t count = 1 + rng() % kMaxPremises;
    // Even cases keep only premises that do not clash with earlier ones.
    const bool keep_compatible = k % 2 == 0;
    Theory t;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < count; ++i) {
      const Formula f = random_formula(rng, m == 1 ? alpha1 : alpha2, 9);
      const auto r = ints(table(f, m));
      bool fits = true;
      for (const auto& q : rows) {
        for (std::size_t v = 0; v < r.size(); ++v) fits = fits && !(r[v] != 1 && q[v] != 1 && r[v] != q[v]);
      }
      if (keep_compatible && !fits) continue;
      const std::size_t before = t.size();
      t.add(f);
      if (t.size() > before) rows.push_back(r);
    }
    if (rows.empty()) {
      t.add(Formula::half());
      rows.push_back(ints(table(Formula::half(), m)));
    }
    largest = std::max(largest, t.size());
    // Goal: per cell 1/2 or the value of a random premise.
    std::vector<int> clash(rows[0].size(), 0);
    bool incompatible = false;
    for (std::size_t v = 0; v < rows[0].size(); ++v) {
      bool z = false, o = false;
      for (const auto& r : rows) {
        z = z || r[v] == 0;
        o = o || r[v] == 2;
      }
      incompatible = incompatible || (z && o);
    }
    TruthTable goal(m, Trit::Half);
    for (std::uint64_t v = 0; v < goal.size(); ++v) {
      const auto& r = rows[rng() % rows.size()];
      if (incompatible) {
        goal.set(v, tv(static_cast<int>(rng() % 3)));
      } else if (rng() % 3 != 0) {
        goal.set(v, tv(r[v]));
      }
    }
    explosive += incompatible ? 1 : 0;
    const Formula phi = synthesize(goal);
    c.check(entails(t, phi, m).holds, "generated case entails");
    const Theory core = compactness_core(t, phi, m);
    bool subset = true;
    for (const auto& f : core.formulas()) {
      subset = subset && std::find(t.formulas().begin(), t.formulas().end(), f) != t.formulas().end();
    }
    c.check(subset, "core is a subset");
    // Semantic check by the oracle: a clash or every boolean goal cell covered.
    std::vector<std::vector<int>> crow;
    for (const auto& f : core.formulas()) crow.push_back(ints(table(f, m)));
    bool clashing = false, covered = true;
    for (std::uint64_t v = 0; v < goal.size(); ++v) {
      bool z = false, o = false, hit = false;
      const int g = iv(goal.get(v));
      for (const auto& r : crow) {
        z = z || r[v] == 0;
        o = o || r[v] == 2;
        hit = hit || r[v] == g;
      }
      clashing = clashing || (z && o);
      covered = covered && (g == 1 || hit);
    }
    c.check(clashing || covered, "core entails goal");
  }
  return c.outcome(std::to_string(kCompactnessCases) + " cases (" + std::to_string(explosive) +
                   " with incompatible premises, up to " + std::to_string(largest) + " premises)");
}

Outcome c10_satz() {
  Counter c;
  for (std::uint64_t i = 0; i < 27; ++i) {
    const TruthTable t = TruthTable::from_code(1, i);
    const Formula phi = synthesize(t);
    const auto o = ints(t);
    const bool taut = std::all_of(o.begin(), o.end(), [](int x) { return x == 1; });
    const bool hits_one = std::count(o.begin(), o.end(), 2) > 0;
    c.check(compatibility(Theory{phi, Formula::neg(phi)}, 1).compatible() == taut, "Satz 1 " + t.row());
    c.check(!compatibility(Theory{phi, Formula::meet(phi, Formula::neg(phi))}, 1).compatible() == hits_one,
            "Satz 2 " + t.row());
  }
  for (std::uint64_t i = 0; i < 27; ++i) {
    for (std::uint64_t j = 0; j < 27; ++j) {
      const Formula a = synthesize(TruthTable::from_code(1, i)), b = synthesize(TruthTable::from_code(1, j));
      if (is_tautology(a) && is_tautology(Formula::arrow(a, b))) c.check(is_tautology(b), "modus ponens");
    }
  }
  const auto w = nonmonotonicity_witness(1);
  const bool first = entails(Theory{w.alpha}, w.gamma, 1).holds;
  const bool second = entails(Theory{Formula::meet(w.alpha, w.beta)}, w.gamma, 1).holds;
  c.check(first && !second && is_nonmonotonicity_witness(w.alpha, w.beta, w.gamma), "nonmonotonicity witness");
  return c.outcome("witness alpha=" + render(w.alpha) + " beta=" + render(w.beta) + " gamma=" + render(w.gamma));
}

Outcome c11_axioms() {
  Counter c;
  c.check(check_axioms(z_post(), post_axioms()).pass, "Z_Post axioms");
  c.check(check_axioms(z_post(), kleene_axioms()).pass, "Z_Post Kleene");
  c.check(check_axioms(z_rm(), rm_axioms()).pass, "Z_RM axioms");
  c.check(derive_post(z_rm()) == z_post(), "derive_post(Z_RM) = Z_Post");
  c.check(derive_rm(z_post()) == z_rm(), "derive_rm(Z_Post) = Z_RM");
  c.check(derive_rm(derive_post(z_rm())) == z_rm(), "Z round trip from RM");
  c.check(derive_post(derive_rm(z_post())) == z_post(), "Z round trip from Post");
  const FiniteAlgebra f2 = faces_algebra(2), f2p = faces_post_algebra(2);
  c.check(check_axioms(f2, rm_axioms()).pass, "F_2 axioms");
  c.check(derive_rm(derive_post(f2)) == f2, "F_2 round trip from RM");
  c.check(derive_post(derive_rm(f2p)) == f2p, "F_2 round trip from Post");
  // Z_RM operation tables against the literal rows.
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      c.check(z_rm().apply("join", x, y) == o_join(x, y) && z_rm().apply("dpar", x, y) == o_dpar(x, y),
              "Z_RM table " + cell(x, y));
    }
  }
  return c.outcome(std::to_string(rm_axioms().equations.size()) + " RM equations");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table fidelity", c1_tables},
      {"equation suite", c2_equations},
      {"literal join-term discrepancy", c3_eq3},
      {"nondefinability of min", c4_clone},
      {"consequence agreement", c5_consequence},
      {"order coincidence", c6_orders},
      {"reduction soundness", c7_reduction},
      {"representation counts", c8_representation},
      {"compactness", c9_compactness},
      {"Satz suite", c10_satz},
      {"axiom suite", c11_axioms},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << "criterion " << id << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " ["
              << time << "] " << o.detail << "\n";
  }
  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass\n";
  if (failed == kKnownUnattainable) {
    std::cout << "only known-unattainable criteria fail: criterion 4 states a property that does not hold "
                 "(min is a composition of 0, h, join and dpar; the witness is printed above)\n";
    return 0;
  }
  for (int k : kKnownUnattainable) {
    if (!failed.count(k)) std::cout << "criterion " << k << " was expected to fail but passed\n";
  }
  return 1;
}
