#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rmlogic/formula.hpp"

namespace rmlogic {

/// Term over a named signature: variables, named constants, named unary and
/// binary operations.
class Term {
 public:
  enum class Kind { Var, Const, Unop, Binop };

  static Term var(int index);
  static Term constant(std::string name);
  static Term unop(std::string name, Term a);
  static Term binop(std::string name, Term a, Term b);

  Kind kind() const { return node_->kind; }
  /// Variable index (0-based) for Var.
  int index() const { return node_->index; }
  /// Constant or operation name.
  const std::string& name() const { return node_->name; }
  const Term& arg(std::size_t i) const { return node_->args[i]; }
  std::size_t arg_count() const { return node_->args.size(); }
  /// Number of distinct variable slots: largest index + 1.
  int var_count() const;

 private:
  struct Node {
    Kind kind = Kind::Var;
    int index = 0;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Variables print as x, y, z, w, then v<i>.
std::string render(const Term& t);

struct Equation {
  std::string label;
  Term lhs;
  Term rhs;
};

struct AxiomSet {
  std::string name;
  std::vector<Equation> equations;
};

/// Post formula over X1.. as a term over zero, half, one, neg, nabla, vee,
/// meet (X<i> becomes variable i-1).
Term post_term(const PostFormula& p);
/// Rewrites Post operations by their RM definitions: one = dpar(half, zero),
/// neg a = dpar(half, a), nabla a = dpar(a, zero),
/// vee(a, b) = neg(meet(neg a, neg b)). Other symbols are kept.
Term post_to_rm(const Term& t);

/// Distributive bounded lattice with involutive De Morgan negation and
/// x & !x <= y | !y (written as an equation).
AxiomSet kleene_axioms();
/// Kleene plus h = !h, !x & N x = !x & x, !x | N x = 1.
AxiomSet post_axioms();
/// Post axioms rewritten into the RM signature, plus the equations tying
/// join and dpar to their Post terms.
AxiomSet rm_axioms();

}  // namespace rmlogic
