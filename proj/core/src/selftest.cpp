#include "rmlogic/selftest.hpp"

#include <functional>
#include <sstream>

#include "rmlogic/algebra.hpp"
#include "rmlogic/clone.hpp"
#include "rmlogic/enumerate.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/faces.hpp"
#include "rmlogic/lindenbaum.hpp"
#include "rmlogic/semantics.hpp"
#include "rmlogic/translate.hpp"

namespace rmlogic {

bool SelftestReport::ok() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Discrepancy: return "DISCREPANCY";
  }
  return "?";
}

std::string format_selftest(const SelftestReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) out << status_name(c.status) << " " << c.name << ": " << c.detail << "\n";
  return out.str();
}

namespace {

constexpr Trit kT[] = {Trit::Zero, Trit::Half, Trit::One};

/// Counts cases and remembers the first failure.
struct Sweep {
  std::uint64_t cases = 0;
  std::string first_failure;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && first_failure.empty()) first_failure = what();
  }
  CheckResult result(std::string name) const {
    if (first_failure.empty()) return {std::move(name), CheckStatus::Pass, std::to_string(cases) + " cases"};
    return {std::move(name), CheckStatus::Fail, "first failure: " + first_failure};
  }
};

std::string cell(Trit x, Trit y) { return std::string("(") + to_char(x) + "," + to_char(y) + ")"; }

CheckResult printed_tables() {
  // Rows x = 0, h, 1; columns y = 0, h, 1. '-' marks an undefined cell.
  const char* join_rows = "0hh" "hhh" "hh1";
  const char* dpar_rows = "0h0" "1h0" "1h1";
  const char* cap_rows = "00-" "0h1" "-11";
  Sweep s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Trit x = kT[i], y = kT[j];
      const int k = i * 3 + j;
      s.check(to_char(join(x, y)) == join_rows[k], [&] { return "join" + cell(x, y); });
      s.check(to_char(dpar(x, y)) == dpar_rows[k], [&] { return "dpar" + cell(x, y); });
      const auto c = meet_partial(x, y);
      s.check(c ? to_char(*c) == cap_rows[k] : cap_rows[k] == '-', [&] { return "cap" + cell(x, y); });
    }
  }
  return s.result("printed join, dpar and cap tables");
}

CheckResult trit_laws() {
  Sweep s;
  for (Trit x : kT) {
    s.check(neg(neg(x)) == x, [&] { return std::string("neg involution at ") + to_char(x); });
    s.check(nabla(nabla(x)) == nabla(x), [&] { return std::string("nabla idempotent at ") + to_char(x); });
    s.check(delta(delta(x)) == delta(x), [&] { return std::string("delta idempotent at ") + to_char(x); });
    s.check(delta(x) == neg(nabla(neg(x))), [&] { return std::string("delta = !N! at ") + to_char(x); });
    s.check(neg(x) == dpar(Trit::Half, x), [&] { return std::string("neg = d(h,x) at ") + to_char(x); });
    s.check(nabla(x) == dpar(x, Trit::Zero), [&] { return std::string("nabla = d(x,0) at ") + to_char(x); });
    s.check(dpar(x, Trit::Half) == Trit::Half, [&] { return std::string("d(x,h) at ") + to_char(x); });
    s.check(sharper(x, x), [&] { return std::string("sharper reflexive at ") + to_char(x); });
    for (Trit y : kT) {
      s.check(join(x, y) == join(y, x), [&] { return "join commutative" + cell(x, y); });
      s.check(meet(x, y) == meet(y, x), [&] { return "meet commutative" + cell(x, y); });
      s.check(below(x, y) == sharper(x, y), [&] { return "below vs sharper" + cell(x, y); });
      s.check(join(neg(x), neg(y)) == neg(join(x, y)), [&] { return "no dual conjunction" + cell(x, y); });
      const Trit eq4 = vee(vee(meet(meet(Trit::Half, nabla(y)), nabla(neg(y))), meet(delta(x), delta(y))),
                           meet(nabla(x), delta(neg(y))));
      s.check(eq4 == dpar(x, y), [&] { return "dpar from Post operations" + cell(x, y); });
      s.check(vee(x, y) == neg(meet(neg(x), neg(y))), [&] { return "vee from neg and meet" + cell(x, y); });
      s.check(nabla(meet(x, y)) == meet(nabla(x), nabla(y)), [&] { return "nabla distributes" + cell(x, y); });
      s.check(meet(meet(x, neg(x)), vee(y, neg(y))) == meet(x, neg(x)), [&] { return "kleene" + cell(x, y); });
      // cap is the greatest common lower bound for below
      std::optional<Trit> best;
      for (Trit c : kT) {
        if (below(c, x) && below(c, y) && (!best || below(*best, c))) best = c;
      }
      s.check(best == meet_partial(x, y), [&] { return "cap as greatest lower bound" + cell(x, y); });
      for (Trit z : kT) {
        s.check(join(x, join(y, z)) == join(join(x, y), z), [&] { return "join associative" + cell(x, y); });
        s.check(!(below(x, y) && below(y, z)) || below(x, z), [&] { return "below transitive" + cell(x, y); });
      }
    }
  }
  s.check(flip(Trit::Zero) == Trit::Zero && flip(Trit::Half) == Trit::One && flip(Trit::One) == Trit::Half,
          [] { return std::string("flip values"); });
  return s.result("trit identities");
}

CheckResult eq3_report() {
  const auto mm = eq3_mismatches();
  if (mm.empty()) return {"printed join term", CheckStatus::Pass, "agrees with the join table on all 9 cells"};
  std::string d = std::to_string(mm.size()) + " mismatching cells:";
  for (const auto& c : mm) {
    d += " " + cell(c.x, c.y) + " expected " + to_char(c.expected) + " got " + to_char(c.actual) + ";";
  }
  d.pop_back();
  return {"printed join term", CheckStatus::Discrepancy, d};
}

CheckResult desugar_sweep() {
  Sweep s;
  for (const auto& f : enumerate_formulas(FormulaAlphabet::sugared(2), 4)) {
    const Formula d = desugar(f);
    s.check(d.is_core(), [&] { return "not core: " + render(d); });
    for (std::uint64_t i = 0; i < 9; ++i) {
      const Valuation v(2, i);
      s.check(eval(f, v) == eval(d, v), [&] { return render(f) + " at " + v.word(); });
    }
    s.check(parse(render(f)) == f, [&] { return "render/parse: " + render(f); });
  }
  for (const Formula& f : {Formula::flip(Formula::var(1)), Formula::arrow(Formula::var(1), Formula::var(2))}) {
    s.check(table(f, 2) == table(desugar(f), 2), [&] { return render(f); });
  }
  return s.result("desugar preserves values");
}

CheckResult translation_sweep() {
  Sweep s;
  for (const auto& f : enumerate_formulas(FormulaAlphabet::core(2), 5)) {
    s.check(table(to_post(f), 2) == table(f, 2), [&] { return "to_post " + render(f); });
  }
  for (const auto& p : enumerate_post_formulas(2, 5)) {
    s.check(table(to_rm(p), 2) == table(p, 2), [&] { return "to_rm " + render(p); });
  }
  s.check(table(join_post_term(), 2) == table(Formula::join(Formula::var(1), Formula::var(2)), 2),
          [] { return std::string("join term"); });
  return s.result("translations preserve tables");
}

CheckResult synthesis_sweep() {
  Sweep s;
  for (int m = 1; m <= 2; ++m) {
    const std::uint64_t n = pow3(static_cast<int>(pow3(m)));
    for (std::uint64_t c = 0; c < n; ++c) {
      const TruthTable t = TruthTable::from_code(m, c);
      s.check(table(synthesize(t), m) == t, [&] { return t.row(); });
    }
  }
  return s.result("synthesize realizes every table (m <= 2)");
}

CheckResult faces_sweep() {
  Sweep s;
  for (int n = 1; n <= 4; ++n) {
    const auto fs = all_faces(n);
    for (const auto& a : fs) {
      s.check(face_from_word(word_from_face(a)) == a, [&] { return "word round trip " + a.text(); });
      s.check(setform::to_face(setform::of(a)) == a, [&] { return "set round trip " + a.text(); });
      bool minimal = true;
      for (const auto& b : fs) {
        if (b != a && sharper_face(b, a)) minimal = false;
      }
      s.check(minimal == a.is_vertex(), [&] { return "minimal = vertex " + a.text(); });
      s.check(farthest_vertex(a).is_vertex(), [&] { return "farthest is a vertex " + a.text(); });
      const auto fv = farthest_vertex_by_search(a);
      std::vector<int> got;
      const Face far = farthest_vertex(a);
      for (Trit t : far.word()) got.push_back(t == Trit::One ? 1 : 0);
      s.check(fv == got, [&] { return "farthest vertex " + a.text(); });
      for (const auto& b : fs) {
        const std::string pair = a.text() + "," + b.text();
        std::vector<Trit> j(a.word().size()), d(a.word().size()), w(a.word().size());
        std::optional<std::vector<Trit>> c = std::vector<Trit>(a.word().size());
        for (std::size_t i = 0; i < j.size(); ++i) {
          j[i] = join(a[i], b[i]);
          d[i] = dpar(a[i], b[i]);
          w[i] = meet(a[i], b[i]);
          auto ci = meet_partial(a[i], b[i]);
          if (!ci) c.reset();
          if (c) (*c)[i] = *ci;
        }
        s.check(join_faces(a, b).word() == j, [&] { return "join " + pair; });
        s.check(setform::to_face(setform::join(setform::of(a), setform::of(b))).word() == j,
                [&] { return "set join " + pair; });
        s.check(dpar_faces(a, b).word() == d, [&] { return "dpar " + pair; });
        s.check(wedge_faces(a, b).word() == w, [&] { return "wedge " + pair; });
        const auto cap = intersect_faces(a, b);
        const auto scap = setform::intersect(setform::of(a), setform::of(b));
        s.check(cap.has_value() == c.has_value() && (!cap || cap->word() == *c), [&] { return "cap " + pair; });
        s.check(scap.has_value() == cap.has_value() && (!scap || setform::to_face(*scap) == *cap),
                [&] { return "set cap " + pair; });
        s.check(is_subface(a, b) == sharper_face(a, b), [&] { return "subface vs sharper " + pair; });
        if (cap) s.check(cap_curly(a, b) == *cap, [&] { return "cap_curly " + pair; });
        s.check(compatible_faces(a, b) == cap.has_value(), [&] { return "compatible " + pair; });
        if (n <= 3) {
          s.check(is_subface_by_vertices(a, b) == is_subface(a, b), [&] { return "subface by vertices " + pair; });
          s.check(is_subface_by_negation(a, b) == is_subface(a, b), [&] { return "subface by negation " + pair; });
        }
        if (n <= 2) {
          s.check(compatible_faces_by_search(a, b) == compatible_faces(a, b),
                  [&] { return "compatible by search " + pair; });
        }
        if (is_subface(a, b)) {
          const Face r = antipodal(b, a);
          s.check(antipodal(b, r) == a, [&] { return "antipodal involution " + pair; });
          s.check(setform::to_face(setform::antipodal(setform::of(b), setform::of(a))) == r,
                  [&] { return "set antipodal " + pair; });
          if (n <= 3) s.check(reflection_check(b, a), [&] { return "reflection " + pair; });
        }
      }
    }
  }
  return s.result("face operations (n <= 4)");
}

CheckResult clone_check() {
  const Clone c({"0", "h", "join", "dpar"});
  const bool neg_present = c.contains(named_op("neg"));
  const bool shapes = !join_shape_for_min() && !dpar_shape_for_min();
  std::string d = std::to_string(c.size()) + " operations after " + std::to_string(c.rounds()) + " rounds; neg " +
                  (neg_present ? "present" : "ABSENT") + "; join and dpar shapes " +
                  (shapes ? "refuted" : "REALIZED");
  if (!neg_present || !shapes) return {"clone of 0, h, join, dpar", CheckStatus::Fail, d};
  if (auto t = c.term_for(named_op("meet"))) {
    return {"clone of 0, h, join, dpar", CheckStatus::Discrepancy, d + "; meet is a member: " + *t};
  }
  return {"clone of 0, h, join, dpar", CheckStatus::Pass, d + "; meet absent"};
}

CheckResult axioms_check() {
  std::string d;
  bool ok = true;
  auto run = [&](const std::string& what, const FiniteAlgebra& a, const AxiomSet& s) {
    const auto r = check_axioms(a, s);
    if (!r.pass) {
      ok = false;
      d += what + ": " + describe(s, *r.failure, a) + "; ";
    }
  };
  run("Z_Post kleene", z_post(), kleene_axioms());
  run("Z_Post post", z_post(), post_axioms());
  run("Z_RM rm", z_rm(), rm_axioms());
  run("F_2 rm", faces_algebra(2), rm_axioms());
  const bool rt_z = derive_rm(derive_post(z_rm())) == z_rm() && derive_post(z_rm()) == z_post() &&
                    derive_post(derive_rm(z_post())) == z_post();
  const bool rt_f2 = derive_rm(derive_post(faces_algebra(2))) == faces_algebra(2) &&
                     derive_post(derive_rm(faces_post_algebra(2))) == faces_post_algebra(2);
  if (!rt_z || !rt_f2) {
    ok = false;
    d += "round trip mismatch; ";
  }
  if (d.empty()) d = std::to_string(rm_axioms().equations.size()) + " RM equations, round trips identical";
  return {"axiom sets and derived algebras", ok ? CheckStatus::Pass : CheckStatus::Fail, d};
}

std::vector<Formula> unary_formulas() {
  std::vector<Formula> out;
  for (std::uint64_t c = 0; c < 27; ++c) out.push_back(synthesize(TruthTable::from_code(1, c)));
  return out;
}

CheckResult consequence_sweep() {
  Sweep s;
  const auto fs = unary_formulas();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = 0; b < fs.size(); ++b) {
      const auto ta = TruthTable::from_code(1, a);
      const auto tb = TruthTable::from_code(1, b);
      const bool direct = entails(Theory{fs[a]}, fs[b], 1).holds;
      const bool via_meet = entails_via_meet(Theory{fs[a]}, fs[b], 1).holds;
      const bool via_red = entails_via_reduction(fs[a], fs[b]);
      const bool pointwise = below(ta, tb);
      s.check(direct == via_meet && via_meet == via_red && via_red == pointwise,
              [&] { return ta.row() + " => " + tb.row(); });
      const bool both = direct && entails(Theory{fs[b]}, fs[a], 1).holds;
      s.check(both == (ta == tb), [&] { return "equivalence " + ta.row() + " " + tb.row(); });
      s.check(equivalent_via_reduction(fs[a], fs[b]) == (ta == tb), [&] { return "reduction equivalence"; });
    }
  }
  return s.result("consequence procedures agree (m = 1)");
}

CheckResult satz_sweep() {
  Sweep s;
  const auto fs = unary_formulas();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    const Formula& phi = fs[a];
    const TruthTable t = TruthTable::from_code(1, a);
    const bool taut = t.is_constant(Trit::Half);
    s.check(compatibility(Theory{phi, Formula::neg(phi)}, 1).compatible() == taut,
            [&] { return "{phi, !phi} " + t.row(); });
    const bool hits_one = t.count(Trit::One) > 0;
    s.check(!compatibility(Theory{phi, Formula::meet(phi, Formula::neg(phi))}, 1).compatible() == hits_one,
            [&] { return "{phi, phi & !phi} " + t.row(); });
    if (taut) {
      for (std::size_t b = 0; b < fs.size(); ++b) {
        s.check(entails(Theory{phi, Formula::neg(phi)}, fs[b], 1).holds ==
                    TruthTable::from_code(1, b).is_constant(Trit::Half),
                [&] { return "tautology context " + t.row(); });
      }
    }
    for (std::size_t b = 0; b < fs.size(); ++b) {
      const bool arrow_taut = table(Formula::arrow(phi, fs[b]), 1).is_constant(Trit::Half);
      s.check(!(taut && arrow_taut) || TruthTable::from_code(1, b).is_constant(Trit::Half),
              [&] { return "modus ponens " + t.row(); });
    }
  }
  const auto w = nonmonotonicity_witness(1);
  s.check(is_nonmonotonicity_witness(w.alpha, w.beta, w.gamma), [] { return std::string("nonmonotonicity"); });
  return s.result("consistency tolerance, modus ponens, nonmonotonicity (m = 1)");
}

CheckResult post_reduction_sweep() {
  Sweep s;
  for (const auto& p : enumerate_post_formulas(2, 5)) {
    s.check(post_tautology(p) == is_tautology(reduce_post_to_rm(p)), [&] { return render(p); });
  }
  return s.result("Post tautology reduction");
}

CheckResult representation_check() {
  const FreeRm f1 = free_rm(1);
  const auto closure = rm_closure(f1.generators());
  const Lindenbaum empty = lind(Theory{}, 1);
  const Lindenbaum one = lind(Theory{Formula::var(1)}, 1);
  const Lindenbaum none = lind(Theory{Formula::nabla(Formula::var(1))}, 1);
  const bool ok = f1.size() == 27 && closure.size() == 27 && empty.algebra &&
                  iso_check(*empty.algebra, faces_algebra(3)).has_value() && one.algebra &&
                  iso_check(*one.algebra, faces_algebra(1)).has_value() && none.algebra && none.algebra->size == 1 &&
                  free_rm(2).size() == 19683;
  return {"free algebra and Lindenbaum algebras", ok ? CheckStatus::Pass : CheckStatus::Fail,
          "free_rm(1) = " + std::to_string(f1.size()) + ", closure of X1 = " + std::to_string(closure.size()) +
              ", lind sizes " + std::to_string(empty.cardinality) + "/" + std::to_string(one.cardinality) + "/" +
              std::to_string(none.cardinality)};
}

CheckResult meet_formula_sweep() {
  Sweep s;
  const auto fs = unary_formulas();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = 0; b < fs.size(); ++b) {
      const auto ta = TruthTable::from_code(1, a);
      const auto tb = TruthTable::from_code(1, b);
      const auto cap = meet_partial(ta, tb);
      if (!cap) continue;
      s.check(table(meet_formula(fs[a], fs[b]), 1) == *cap, [&] { return ta.row() + " cap " + tb.row(); });
    }
  }
  return s.result("intersection formula matches the cap table (m = 1)");
}

CheckResult tables_check() {
  bool ok = true;
  std::string d;
  for (int which = 1; which <= 2; ++which) {
    const auto r = table_correspondence_check(which, 1);
    ok = ok && r.pass();
    d += "table " + std::to_string(which) + ": " + std::to_string(r.rows.size()) + " rows " +
         (r.pass() ? "pass" : "FAIL") + "; ";
  }
  d.resize(d.size() - 2);
  return {"simplex and cube tables (m = 1)", ok ? CheckStatus::Pass : CheckStatus::Fail, d};
}

}  // namespace

SelftestReport run_selftest() {
  SelftestReport r;
  const std::vector<std::function<CheckResult()>> checks = {
      printed_tables,      trit_laws,         eq3_report,      desugar_sweep,
      translation_sweep,   synthesis_sweep,   faces_sweep,     clone_check,
      axioms_check,        consequence_sweep, satz_sweep,      post_reduction_sweep,
      representation_check, meet_formula_sweep, tables_check};
  for (const auto& c : checks) {
    try {
      r.checks.push_back(c());
    } catch (const std::exception& e) {
      r.checks.push_back({"(exception)", CheckStatus::Fail, e.what()});
    }
  }
  return r;
}

}  // namespace rmlogic
