#include "rmlogic/term.hpp"

#include <algorithm>

#include "rmlogic/translate.hpp"

namespace rmlogic {

Term Term::var(int index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  return Term(n);
}

Term Term::constant(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = std::move(name);
  return Term(n);
}

Term Term::unop(std::string name, Term a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unop;
  n->name = std::move(name);
  n->args = {std::move(a)};
  return Term(n);
}

Term Term::binop(std::string name, Term a, Term b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binop;
  n->name = std::move(name);
  n->args = {std::move(a), std::move(b)};
  return Term(n);
}

int Term::var_count() const {
  if (kind() == Kind::Var) return index() + 1;
  int c = 0;
  for (const auto& a : node_->args) c = std::max(c, a.var_count());
  return c;
}

std::string render(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      static const char* names[] = {"x", "y", "z", "w"};
      return t.index() < 4 ? names[t.index()] : "v" + std::to_string(t.index());
    }
    case Term::Kind::Const: return t.name();
    case Term::Kind::Unop: return t.name() + "(" + render(t.arg(0)) + ")";
    case Term::Kind::Binop: return t.name() + "(" + render(t.arg(0)) + ", " + render(t.arg(1)) + ")";
  }
  return {};
}

Term post_term(const PostFormula& p) {
  switch (p.op()) {
    case PostOp::Const0: return Term::constant("zero");
    case PostOp::ConstHalf: return Term::constant("half");
    case PostOp::Const1: return Term::constant("one");
    case PostOp::Var: return Term::var(p.index() - 1);
    case PostOp::Neg: return Term::unop("neg", post_term(p.operand()));
    case PostOp::Nabla: return Term::unop("nabla", post_term(p.operand()));
    case PostOp::Vee: return Term::binop("vee", post_term(p.lhs()), post_term(p.rhs()));
    case PostOp::Meet: return Term::binop("meet", post_term(p.lhs()), post_term(p.rhs()));
  }
  return Term::constant("zero");
}

Term post_to_rm(const Term& t) {
  const Term half = Term::constant("half");
  auto neg = [&](Term a) { return Term::binop("dpar", half, std::move(a)); };
  switch (t.kind()) {
    case Term::Kind::Var: return t;
    case Term::Kind::Const:
      if (t.name() == "one") return Term::binop("dpar", half, Term::constant("zero"));
      return t;
    case Term::Kind::Unop: {
      Term a = post_to_rm(t.arg(0));
      if (t.name() == "neg") return neg(a);
      if (t.name() == "nabla") return Term::binop("dpar", a, Term::constant("zero"));
      return Term::unop(t.name(), a);
    }
    case Term::Kind::Binop: {
      Term a = post_to_rm(t.arg(0));
      Term b = post_to_rm(t.arg(1));
      if (t.name() == "vee") return neg(Term::binop("meet", neg(a), neg(b)));
      return Term::binop(t.name(), a, b);
    }
  }
  return t;
}

namespace {

Term x() { return Term::var(0); }
Term y() { return Term::var(1); }
Term z() { return Term::var(2); }
Term c(const char* n) { return Term::constant(n); }
Term u(const char* n, Term a) { return Term::unop(n, std::move(a)); }
Term b(const char* n, Term l, Term r) { return Term::binop(n, std::move(l), std::move(r)); }

}  // namespace

AxiomSet kleene_axioms() {
  AxiomSet s{"kleene", {}};
  auto add = [&](std::string label, Term l, Term r) { s.equations.push_back({std::move(label), l, r}); };
  for (const char* op : {"vee", "meet"}) {
    const std::string o = op;
    add(o + " associative", b(op, x(), b(op, y(), z())), b(op, b(op, x(), y()), z()));
    add(o + " commutative", b(op, x(), y()), b(op, y(), x()));
    add(o + " idempotent", b(op, x(), x()), x());
  }
  add("absorption vee", b("vee", x(), b("meet", x(), y())), x());
  add("absorption meet", b("meet", x(), b("vee", x(), y())), x());
  add("distributive", b("meet", x(), b("vee", y(), z())), b("vee", b("meet", x(), y()), b("meet", x(), z())));
  add("zero least", b("vee", x(), c("zero")), x());
  add("one greatest", b("meet", x(), c("one")), x());
  add("double negation", u("neg", u("neg", x())), x());
  add("de morgan", u("neg", b("vee", x(), y())), b("meet", u("neg", x()), u("neg", y())));
  const Term lo = b("meet", x(), u("neg", x()));
  const Term hi = b("vee", y(), u("neg", y()));
  add("kleene inequality", b("meet", lo, hi), lo);
  return s;
}

AxiomSet post_axioms() {
  AxiomSet s = kleene_axioms();
  s.name = "post";
  s.equations.push_back({"center", c("half"), u("neg", c("half"))});
  s.equations.push_back(
      {"neg nabla meet", b("meet", u("neg", x()), u("nabla", x())), b("meet", u("neg", x()), x())});
  s.equations.push_back({"neg nabla vee", b("vee", u("neg", x()), u("nabla", x())), c("one")});
  return s;
}

AxiomSet rm_axioms() {
  AxiomSet s{"rm", {}};
  for (const auto& e : post_axioms().equations) {
    s.equations.push_back({e.label, post_to_rm(e.lhs), post_to_rm(e.rhs)});
  }
  s.equations.push_back({"join glue", b("join", x(), y()), post_to_rm(post_term(join_post_term()))});
  s.equations.push_back({"dpar glue", b("dpar", x(), y()), post_to_rm(post_term(dpar_post_term()))});
  return s;
}

}  // namespace rmlogic
