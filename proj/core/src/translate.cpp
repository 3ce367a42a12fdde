#include "rmlogic/translate.hpp"

#include <unordered_map>

#include "rmlogic/errors.hpp"
#include "rmlogic/semantics.hpp"

namespace rmlogic {

namespace {

Formula rm_neg(const Formula& a) { return Formula::dpar(Formula::half(), a); }

Formula to_rm_rec(const PostFormula& p, std::unordered_map<const void*, Formula>& memo) {
  if (auto it = memo.find(p.id()); it != memo.end()) return it->second;
  Formula out;
  switch (p.op()) {
    case PostOp::Const0: out = Formula::zero(); break;
    case PostOp::ConstHalf: out = Formula::half(); break;
    case PostOp::Const1: out = Formula::dpar(Formula::half(), Formula::zero()); break;
    case PostOp::Var: out = Formula::var(p.name(), p.index()); break;
    case PostOp::Neg: out = rm_neg(to_rm_rec(p.operand(), memo)); break;
    case PostOp::Nabla: out = Formula::dpar(to_rm_rec(p.operand(), memo), Formula::zero()); break;
    case PostOp::Meet: out = Formula::meet(to_rm_rec(p.lhs(), memo), to_rm_rec(p.rhs(), memo)); break;
    case PostOp::Vee:
      out = rm_neg(Formula::meet(rm_neg(to_rm_rec(p.lhs(), memo)), rm_neg(to_rm_rec(p.rhs(), memo))));
      break;
  }
  memo.emplace(p.id(), out);
  return out;
}

PostFormula post_delta(const PostFormula& a) { return PostFormula::neg(PostFormula::nabla(PostFormula::neg(a))); }

PostFormula to_post_rec(const Formula& f, std::unordered_map<const void*, PostFormula>& memo) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  auto rec = [&](const Formula& g) { return to_post_rec(g, memo); };
  PostFormula out;
  switch (f.op()) {
    case Op::Const0: out = PostFormula::zero(); break;
    case Op::ConstHalf: out = PostFormula::half(); break;
    case Op::Const1: out = PostFormula::one(); break;
    case Op::Var: out = PostFormula::var(f.name(), f.index()); break;
    case Op::Meet: out = PostFormula::meet(rec(f.lhs()), rec(f.rhs())); break;
    case Op::Vee: out = PostFormula::vee(rec(f.lhs()), rec(f.rhs())); break;
    case Op::Neg: out = PostFormula::neg(rec(f.operand())); break;
    case Op::Nabla: out = PostFormula::nabla(rec(f.operand())); break;
    case Op::Delta: out = post_delta(rec(f.operand())); break;
    case Op::Flip:
    case Op::Arrow: {
      // One level of sugar removed; subterms keep their own sugar.
      const Formula a = f.lhs();
      if (f.op() == Op::Flip) {
        out = rec(Formula::join(Formula::dpar(a, Formula::zero()),
                                Formula::dpar(Formula::dpar(Formula::zero(), a), Formula::zero())));
      } else {
        out = rec(desugar(f));
      }
      break;
    }
    case Op::Join: out = substitute(join_post_term(), {rec(f.lhs()), rec(f.rhs())}); break;
    case Op::Dpar: {
      const Formula a = f.lhs();
      const Formula b = f.rhs();
      if (a.op() == Op::ConstHalf && b.op() == Op::Const0) {
        out = PostFormula::one();
      } else if (b.op() == Op::Const0) {
        out = PostFormula::nabla(rec(a));
      } else if (a.op() == Op::ConstHalf) {
        out = PostFormula::neg(rec(b));
      } else {
        out = substitute(dpar_post_term(), {rec(a), rec(b)});
      }
      break;
    }
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula to_rm(const PostFormula& p) {
  std::unordered_map<const void*, Formula> memo;
  return to_rm_rec(p, memo);
}

PostFormula to_post(const Formula& f) {
  std::unordered_map<const void*, PostFormula> memo;
  return to_post_rec(f, memo);
}

const PostFormula& join_post_term() {
  static const PostFormula term = [] {
    TruthTable t(2);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      const Valuation v(2, i);
      t.set(i, join(v.at(1), v.at(2)));
    }
    return as_post(synthesize(t));
  }();
  return term;
}

const PostFormula& dpar_post_term() {
  static const PostFormula term = [] {
    const auto x = PostFormula::var(1);
    const auto y = PostFormula::var(2);
    const auto ny = PostFormula::neg(y);
    auto first = PostFormula::meet(PostFormula::meet(PostFormula::half(), PostFormula::nabla(y)),
                                   PostFormula::nabla(ny));
    auto second = PostFormula::meet(post_delta(x), post_delta(y));
    auto third = PostFormula::meet(PostFormula::nabla(x), post_delta(ny));
    return PostFormula::vee(PostFormula::vee(first, second), third);
  }();
  return term;
}

Formula synthesize(const TruthTable& t) {
  const int m = t.arity();
  if (m < 1) throw PreconditionError("synthesize needs arity >= 1; use a constant for arity 0");
  auto indicator = [](int var, Trit value) {
    const Formula x = Formula::var(var);
    switch (value) {
      case Trit::One: return Formula::delta(x);
      case Trit::Zero: return Formula::delta(Formula::neg(x));
      case Trit::Half: break;
    }
    return Formula::meet(Formula::nabla(x), Formula::nabla(Formula::neg(x)));
  };
  std::optional<Formula> acc;
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    const Trit value = t.get(i);
    if (value == Trit::Zero) continue;
    const Valuation v(m, i);
    Formula chi = indicator(1, v.at(1));
    for (int k = 2; k <= m; ++k) chi = Formula::meet(chi, indicator(k, v.at(k)));
    if (value == Trit::Half) chi = Formula::meet(chi, Formula::half());
    acc = acc ? Formula::vee(*acc, chi) : chi;
  }
  return acc ? *acc : Formula::zero();
}

Formula eq3_literal(const Formula& x, const Formula& y) {
  const Formula h = Formula::half();
  const Formula first = Formula::meet(Formula::meet(Formula::neg(Formula::nabla(y)), Formula::nabla(y)), h);
  const Formula second = Formula::meet(Formula::delta(y), Formula::vee(h, Formula::delta(x)));
  const Formula third = Formula::dpar(Formula::zero(), y);
  return Formula::vee(Formula::vee(first, second), third);
}

std::vector<CellMismatch> eq3_mismatches() {
  const TruthTable lit = table(eq3_literal(Formula::var(1), Formula::var(2)), 2);
  std::vector<CellMismatch> out;
  for (std::uint64_t i = 0; i < lit.size(); ++i) {
    const Valuation v(2, i);
    const Trit expected = join(v.at(1), v.at(2));
    if (lit.get(i) != expected) out.push_back({v.at(1), v.at(2), expected, lit.get(i)});
  }
  return out;
}

}  // namespace rmlogic
