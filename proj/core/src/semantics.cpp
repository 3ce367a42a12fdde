#include "rmlogic/semantics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "rmlogic/enumerate.hpp"
#include "rmlogic/errors.hpp"
#include "rmlogic/translate.hpp"

namespace rmlogic {

// ---------------------------------------------------------------------------
// Evaluation

Trit eval(const Formula& f, const Valuation& v) {
  switch (f.op()) {
    case Op::Const0: return Trit::Zero;
    case Op::ConstHalf: return Trit::Half;
    case Op::Const1: return Trit::One;
    case Op::Var:
      if (f.index() > v.arity()) {
        throw ArityError("variable " + f.name() + " exceeds arity " + std::to_string(v.arity()));
      }
      return v.at(f.index());
    case Op::Join: return join(eval(f.lhs(), v), eval(f.rhs(), v));
    case Op::Dpar: return dpar(eval(f.lhs(), v), eval(f.rhs(), v));
    case Op::Meet: return meet(eval(f.lhs(), v), eval(f.rhs(), v));
    case Op::Neg: return neg(eval(f.operand(), v));
    case Op::Nabla: return nabla(eval(f.operand(), v));
    case Op::Delta: return delta(eval(f.operand(), v));
    case Op::Vee: return vee(eval(f.lhs(), v), eval(f.rhs(), v));
    case Op::Flip: return flip(eval(f.operand(), v));
    case Op::Arrow: return eval(desugar(f), v);
  }
  throw InvariantError("unhandled connective in eval");
}

Trit eval(const PostFormula& f, const Valuation& v) {
  switch (f.op()) {
    case PostOp::Const0: return Trit::Zero;
    case PostOp::ConstHalf: return Trit::Half;
    case PostOp::Const1: return Trit::One;
    case PostOp::Var:
      if (f.index() > v.arity()) {
        throw ArityError("variable " + f.name() + " exceeds arity " + std::to_string(v.arity()));
      }
      return v.at(f.index());
    case PostOp::Neg: return neg(eval(f.operand(), v));
    case PostOp::Nabla: return nabla(eval(f.operand(), v));
    case PostOp::Vee: return vee(eval(f.lhs(), v), eval(f.rhs(), v));
    case PostOp::Meet: return meet(eval(f.lhs(), v), eval(f.rhs(), v));
  }
  throw InvariantError("unhandled connective in eval");
}

namespace {

class Tabulator {
 public:
  explicit Tabulator(int m) : m_(m) {}

  TruthTable run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    TruthTable t = compute(f);
    memo_.emplace(f.id(), t);
    return t;
  }

  TruthTable run(const PostFormula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    TruthTable t = compute(f);
    memo_.emplace(f.id(), t);
    return t;
  }

 private:
  TruthTable var(int index, const std::string& name) const {
    if (index > m_) throw ArityError("variable " + name + " exceeds arity " + std::to_string(m_));
    return TruthTable::coordinate(m_, index);
  }

  TruthTable compute(const Formula& f) {
    switch (f.op()) {
      case Op::Const0: return TruthTable(m_, Trit::Zero);
      case Op::ConstHalf: return TruthTable(m_, Trit::Half);
      case Op::Const1: return TruthTable(m_, Trit::One);
      case Op::Var: return var(f.index(), f.name());
      case Op::Join: return join(run(f.lhs()), run(f.rhs()));
      case Op::Dpar: return dpar(run(f.lhs()), run(f.rhs()));
      case Op::Meet: return meet(run(f.lhs()), run(f.rhs()));
      case Op::Neg: return neg(run(f.operand()));
      case Op::Nabla: return nabla(run(f.operand()));
      case Op::Delta: return delta(run(f.operand()));
      case Op::Vee: return vee(run(f.lhs()), run(f.rhs()));
      case Op::Flip: {
        const TruthTable a = run(f.operand());
        const TruthTable z(m_, Trit::Zero);
        return join(dpar(a, z), dpar(dpar(z, a), z));
      }
      case Op::Arrow: return run(desugar(f));
    }
    throw InvariantError("unhandled connective in table");
  }

  TruthTable compute(const PostFormula& f) {
    switch (f.op()) {
      case PostOp::Const0: return TruthTable(m_, Trit::Zero);
      case PostOp::ConstHalf: return TruthTable(m_, Trit::Half);
      case PostOp::Const1: return TruthTable(m_, Trit::One);
      case PostOp::Var: return var(f.index(), f.name());
      case PostOp::Neg: return neg(run(f.operand()));
      case PostOp::Nabla: return nabla(run(f.operand()));
      case PostOp::Vee: return vee(run(f.lhs()), run(f.rhs()));
      case PostOp::Meet: return meet(run(f.lhs()), run(f.rhs()));
    }
    throw InvariantError("unhandled connective in table");
  }

  int m_;
  std::unordered_map<const void*, TruthTable> memo_;
};

}  // namespace

TruthTable table(const Formula& f, int m) { return Tabulator(m).run(f); }
TruthTable table(const PostFormula& f, int m) { return Tabulator(m).run(f); }

bool equivalent(const Formula& f, const Formula& g, int m) {
  const int a = std::max({f.max_var(), g.max_var(), m});
  return table(f, a) == table(g, a);
}

bool is_tautology(const Formula& f) { return table(f, f.max_var()).is_constant(Trit::Half); }

bool post_tautology(const PostFormula& b) { return table(b, b.max_var()).is_constant(Trit::One); }

// ---------------------------------------------------------------------------
// Theory

Theory::Theory(std::initializer_list<Formula> fs) {
  for (const auto& f : fs) add(f);
}

Theory::Theory(const std::vector<Formula>& fs) {
  for (const auto& f : fs) add(f);
}

void Theory::add(const Formula& f) {
  if (std::find(formulas_.begin(), formulas_.end(), f) == formulas_.end()) formulas_.push_back(f);
}

int Theory::max_var() const {
  int m = 0;
  for (const auto& f : formulas_) m = std::max(m, f.max_var());
  return m;
}

int arity_for(const Theory& t, const Formula& f, std::optional<int> override_arity) {
  const int needed = std::max(t.max_var(), f.max_var());
  if (!override_arity) return needed;
  if (*override_arity < needed) {
    throw ArityError("arity " + std::to_string(*override_arity) + " is smaller than the largest variable index " +
                     std::to_string(needed));
  }
  return *override_arity;
}

namespace {

std::vector<TruthTable> tabulate(const Theory& t, int m) {
  std::vector<TruthTable> out;
  out.reserve(t.size());
  for (const auto& f : t.formulas()) out.push_back(table(f, m));
  return out;
}

std::optional<std::uint64_t> first_set(const std::vector<std::uint64_t>& plane) {
  for (std::size_t w = 0; w < plane.size(); ++w) {
    if (plane[w]) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(plane[w]));
  }
  return std::nullopt;
}

/// Least index where both tables are 1/2.
std::optional<std::uint64_t> first_both_half(const TruthTable& a, const TruthTable& b) {
  const auto ha = a.half_plane(), hb = b.half_plane();
  std::vector<std::uint64_t> both(ha.size());
  for (std::size_t w = 0; w < ha.size(); ++w) both[w] = ha[w] & hb[w];
  return first_set(both);
}

CompatibilityResult compatibility_of_tables(const std::vector<TruthTable>& ts, int m,
                                            IncompatibilityReading reading) {
  std::optional<std::tuple<std::uint64_t, std::size_t, std::size_t>> best;
  auto consider = [&](std::optional<std::uint64_t> v, std::size_t i, std::size_t j) {
    if (!v) return;
    const auto cand = std::make_tuple(*v, i, j);
    if (!best || cand < *best) best = cand;
  };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    // Under the literal reading a premise valued 1/2 clashes with itself.
    if (reading == IncompatibilityReading::Literal) consider(first_both_half(ts[i], ts[i]), i, i);
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      consider(first_clash(ts[i], ts[j]), i, j);
      if (reading == IncompatibilityReading::Literal) consider(first_both_half(ts[i], ts[j]), i, j);
    }
  }
  CompatibilityResult r;
  if (best) {
    r.mode = Mode::Incompatible;
    r.witness = Witness{Valuation(m, std::get<0>(*best)), {std::get<1>(*best), std::get<2>(*best)}};
  }
  return r;
}

}  // namespace

CompatibilityResult compatibility(const Theory& t, std::optional<int> arity, IncompatibilityReading reading) {
  const int m = arity ? *arity : t.max_var();
  if (m < t.max_var()) throw ArityError("arity smaller than the largest variable index of the premises");
  return compatibility_of_tables(tabulate(t, m), m, reading);
}

Verdict entails(const Theory& t, const Formula& f, std::optional<int> arity, IncompatibilityReading reading) {
  const int m = arity_for(t, f, arity);
  const auto ts = tabulate(t, m);
  if (auto c = compatibility_of_tables(ts, m, reading); !c.compatible()) {
    return Verdict{true, Mode::Incompatible, c.witness};
  }
  const TruthTable ft = table(f, m);
  const auto fz = ft.zero_plane(), fo = ft.one_plane();
  std::vector<std::uint64_t> bad(fz.size());
  for (std::size_t w = 0; w < fz.size(); ++w) {
    std::uint64_t any_zero = 0, any_one = 0;
    for (const auto& th : ts) {
      any_zero |= th.zero_plane()[w];
      any_one |= th.one_plane()[w];
    }
    bad[w] = (fz[w] & ~any_zero) | (fo[w] & ~any_one);
  }
  Verdict v{true, Mode::Compatible, std::nullopt};
  if (auto i = first_set(bad)) {
    v.holds = false;
    v.witness = Witness{Valuation(m, *i), {}};
  }
  return v;
}

Verdict entails_via_meet(const Theory& t, const Formula& f, std::optional<int> arity) {
  const int m = arity_for(t, f, arity);
  const auto ts = tabulate(t, m);
  if (!compatibility_of_tables(ts, m, IncompatibilityReading::Clash).compatible()) {
    throw PreconditionError("premise set is incompatible; the intersection of its tables is undefined");
  }
  TruthTable folded(m, Trit::Half);
  for (const auto& th : ts) {
    auto next = meet_partial(folded, th);
    if (!next) throw InvariantError("intersection undefined on a compatible premise set");
    folded = std::move(*next);
  }
  const TruthTable ft = table(f, m);
  Verdict v{true, Mode::Compatible, std::nullopt};
  if (join(folded, ft) != ft) {
    v.holds = false;
    v.witness = Witness{Valuation(m, *first_not_below(folded, ft)), {}};
  }
  return v;
}

Formula meet_formula(const Formula& t1, const Formula& t2) {
  if (!compatibility(Theory{t1, t2}).compatible()) {
    throw PreconditionError("meet_formula: the two premises are incompatible");
  }
  using F = Formula;
  const F left = F::neg(F::nabla(F::meet(F::neg(t1), F::neg(t2))));
  const F right = F::meet(F::meet(F::half(), F::nabla(F::meet(t1, F::neg(t1)))), F::nabla(F::meet(t2, F::neg(t2))));
  return F::vee(left, right);
}

Formula consequence_formula(const Formula& a, const Formula& b) {
  using F = Formula;
  const F p = F::join(b, F::nabla(F::neg(a)));
  const F q = F::join(b, F::neg(F::nabla(a)));
  return F::meet(F::meet(F::meet(p, q), F::neg(p)), F::neg(q));
}

bool entails_via_reduction(const Formula& a, const Formula& b) { return is_tautology(consequence_formula(a, b)); }

bool equivalent_via_reduction(const Formula& a, const Formula& b) {
  return is_tautology(Formula::meet(consequence_formula(a, b), consequence_formula(b, a)));
}

Formula reduce_post_to_rm(const PostFormula& b) {
  const Formula bp = to_rm(b);
  const Formula z = Formula::zero();
  return Formula::join(Formula::dpar(bp, z), Formula::dpar(Formula::dpar(z, bp), z));
}

Theory compactness_core(const Theory& t, const Formula& f, std::optional<int> arity) {
  const int m = arity_for(t, f, arity);
  const auto ts = tabulate(t, m);
  if (!entails(t, f, m).holds) throw PreconditionError("compactness_core requires the premises to entail the goal");
  const TruthTable ft = table(f, m);
  std::vector<bool> picked(ts.size(), false);
  bool cover_complete = true;
  for (std::uint64_t v = 0; v < ft.size(); ++v) {
    const Trit goal = ft.get(v);
    if (goal == Trit::Half) continue;
    bool covered = false;
    for (std::size_t i = 0; i < ts.size() && !covered; ++i) covered = picked[i] && ts[i].get(v) == goal;
    if (covered) continue;
    std::size_t i = 0;
    while (i < ts.size() && ts[i].get(v) != goal) ++i;
    if (i == ts.size()) {
      cover_complete = false;
      break;
    }
    picked[i] = true;
  }
  Theory core;
  if (cover_complete) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (picked[i]) core.add(t[i]);
    }
    return core;
  }
  // Entailment holds only by explosion: the least clashing pair suffices.
  const auto c = compatibility_of_tables(ts, m, IncompatibilityReading::Clash);
  if (c.compatible() || !c.witness) throw InvariantError("entailment without cover or clash");
  for (auto i : c.witness->premises) core.add(t[i]);
  return core;
}

bool is_nonmonotonicity_witness(const Formula& a, const Formula& b, const Formula& g) {
  const Formula ab = Formula::meet(a, b);
  return entails(Theory{a}, g).holds && compatibility(Theory{ab}).compatible() && !entails(Theory{ab}, g).holds;
}

NonmonotonicityWitness nonmonotonicity_witness(int m) {
  if (m < 1) throw PreconditionError("nonmonotonicity_witness needs at least one variable");
  for (std::size_t bound = 1; bound <= 5; ++bound) {
    const auto fs = enumerate_formulas(FormulaAlphabet::core(m), bound);
    for (const auto& a : fs) {
      for (const auto& g : fs) {
        if (!entails(Theory{a}, g, m).holds) continue;
        for (const auto& b : fs) {
          if (std::max({a.size(), b.size(), g.size()}) != bound) continue;
          if (is_nonmonotonicity_witness(a, b, g)) return {a, b, g};
        }
      }
    }
  }
  throw InvariantError("no nonmonotonicity witness found");
}

}  // namespace rmlogic
