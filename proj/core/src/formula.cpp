#include "rmlogic/formula.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "rmlogic/errors.hpp"

namespace rmlogic {

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

struct OpInfo {
  Op op;
  std::string_view name;
  int arity;
};

constexpr OpInfo kOps[] = {
    {Op::Const0, "0", 0},      {Op::ConstHalf, "h", 0}, {Op::Const1, "1", 0},
    {Op::Var, "var", 0},       {Op::Join, "join", 2},   {Op::Dpar, "dpar", 2},
    {Op::Meet, "meet", 2},     {Op::Neg, "neg", 1},     {Op::Nabla, "nabla", 1},
    {Op::Delta, "delta", 1},   {Op::Vee, "vee", 2},     {Op::Flip, "flip", 1},
    {Op::Arrow, "arrow", 2},
};

const OpInfo& info(Op op) { return kOps[static_cast<int>(op)]; }

}  // namespace

int op_arity(Op op) { return info(op).arity; }

bool is_core(Op op) {
  switch (op) {
    case Op::Const0:
    case Op::ConstHalf:
    case Op::Var:
    case Op::Join:
    case Op::Dpar:
    case Op::Meet:
      return true;
    default:
      return false;
  }
}

std::string_view op_name(Op op) { return info(op).name; }

std::optional<Op> op_from_name(std::string_view name) {
  for (const auto& i : kOps) {
    if (i.arity > 0 && i.name == name) return i.op;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Formula

namespace {

NodePtr make_leaf(Op op) {
  auto n = std::make_shared<Formula::Node>();
  n->op = op;
  return n;
}

const NodePtr& zero_node() {
  static const NodePtr n = make_leaf(Op::Const0);
  return n;
}

}  // namespace

Formula::Formula() : node_(zero_node()) {}

Formula Formula::zero() { return Formula(zero_node()); }

Formula Formula::half() {
  static const NodePtr n = make_leaf(Op::ConstHalf);
  return Formula(n);
}

Formula Formula::one() {
  static const NodePtr n = [] {
    auto p = std::make_shared<Node>();
    p->op = Op::Const1;
    p->core = false;
    return p;
  }();
  return Formula(n);
}

Formula Formula::var(int index) { return var("X" + std::to_string(index), index); }

Formula Formula::var(std::string name, int index) {
  if (index < 1) throw InputError("variable index must be positive");
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->index = index;
  n->name = std::move(name);
  n->max_var = index;
  return Formula(std::move(n));
}

Formula Formula::make(Op op, std::vector<Formula> args) {
  if (op == Op::Var) throw InputError("use Formula::var for variables");
  if (static_cast<int>(args.size()) != op_arity(op)) {
    throw InputError("wrong number of arguments for '" + std::string(op_name(op)) + "'");
  }
  switch (op) {
    case Op::Const0: return zero();
    case Op::ConstHalf: return half();
    case Op::Const1: return one();
    default: break;
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->core = rmlogic::is_core(op);
  n->lhs = args[0].node_;
  n->size = 1 + args[0].size();
  n->max_var = args[0].max_var();
  n->core = n->core && args[0].is_core();
  if (args.size() == 2) {
    n->rhs = args[1].node_;
    n->size += args[1].size();
    n->max_var = std::max(n->max_var, args[1].max_var());
    n->core = n->core && args[1].is_core();
  }
  return Formula(std::move(n));
}

Formula Formula::join(Formula a, Formula b) { return make(Op::Join, {std::move(a), std::move(b)}); }
Formula Formula::dpar(Formula a, Formula b) { return make(Op::Dpar, {std::move(a), std::move(b)}); }
Formula Formula::meet(Formula a, Formula b) { return make(Op::Meet, {std::move(a), std::move(b)}); }
Formula Formula::neg(Formula a) { return make(Op::Neg, {std::move(a)}); }
Formula Formula::nabla(Formula a) { return make(Op::Nabla, {std::move(a)}); }
Formula Formula::delta(Formula a) { return make(Op::Delta, {std::move(a)}); }
Formula Formula::vee(Formula a, Formula b) { return make(Op::Vee, {std::move(a), std::move(b)}); }
Formula Formula::flip(Formula a) { return make(Op::Flip, {std::move(a)}); }
Formula Formula::arrow(Formula a, Formula b) { return make(Op::Arrow, {std::move(a), std::move(b)}); }

Op Formula::op() const { return node_->op; }

Formula Formula::lhs() const {
  assert(node_->lhs);
  return Formula(node_->lhs);
}

Formula Formula::rhs() const {
  assert(node_->rhs);
  return Formula(node_->rhs);
}

const std::string& Formula::name() const { return node_->name; }
int Formula::index() const { return node_->index; }
std::size_t Formula::size() const { return node_->size; }
int Formula::max_var() const { return node_->max_var; }
bool Formula::is_core() const { return node_->core; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.size != y.size) return false;
  if (x.op == Op::Var) return x.index == y.index && x.name == y.name;
  switch (op_arity(x.op)) {
    case 0: return true;
    case 1: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// VarMap

namespace {

std::optional<int> x_index(std::string_view name) {
  if (name.size() < 2 || name[0] != 'X' || name[1] == '0') return std::nullopt;
  int v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    v = v * 10 + (name[i] - '0');
    if (v > 1'000'000) return std::nullopt;
  }
  return v;
}

}  // namespace

VarMap VarMap::from_names(const std::vector<std::string>& names) {
  VarMap m;
  int max_x = 0;
  for (const auto& n : names) {
    if (auto k = x_index(n)) max_x = std::max(max_x, *k);
  }
  int next = max_x;
  for (const auto& n : names) {
    if (m.find(n)) continue;
    if (auto k = x_index(n)) {
      m.entries_.emplace_back(n, *k);
    } else {
      m.entries_.emplace_back(n, ++next);
    }
  }
  return m;
}

std::optional<int> VarMap::find(std::string_view name) const {
  for (const auto& [n, i] : entries_) {
    if (n == name) return i;
  }
  return std::nullopt;
}

std::string VarMap::name_of(int index) const {
  for (const auto& [n, i] : entries_) {
    if (i == index) return n;
  }
  return "X" + std::to_string(index);
}

int VarMap::max_index() const {
  int m = 0;
  for (const auto& e : entries_) m = std::max(m, e.second);
  return m;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Arrow: return 1;
    case Op::Vee: return 2;
    case Op::Join: return 3;
    case Op::Meet: return 4;
    case Op::Neg:
    case Op::Nabla:
    case Op::Delta:
    case Op::Flip: return 5;
    default: return 6;
  }
}

std::string_view infix(Op op) {
  switch (op) {
    case Op::Arrow: return " ~> ";
    case Op::Vee: return " | ";
    case Op::Join: return " # ";
    case Op::Meet: return " & ";
    default: return "";
  }
}

std::string_view prefix(Op op) {
  switch (op) {
    case Op::Neg: return "!";
    case Op::Nabla: return "N ";
    case Op::Delta: return "T ";
    case Op::Flip: return "F ";
    default: return "";
  }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  const Op op = f.op();
  const int p = precedence(op);
  const bool paren = p < min_prec;
  if (paren) out.push_back('(');
  switch (op) {
    case Op::Const0: out += "0"; break;
    case Op::ConstHalf: out += "h"; break;
    case Op::Const1: out += "1"; break;
    case Op::Var: out += f.name(); break;
    case Op::Dpar:
      out += "d(";
      render_into(f.lhs(), 0, out);
      out += ",";
      render_into(f.rhs(), 0, out);
      out += ")";
      break;
    case Op::Neg:
    case Op::Nabla:
    case Op::Delta:
    case Op::Flip: {
      out += prefix(op);
      render_into(f.operand(), 5, out);
      break;
    }
    default:
      render_into(f.lhs(), p, out);
      out += infix(op);
      render_into(f.rhs(), p + 1, out);
      break;
  }
  if (paren) out.push_back(')');
}

}  // namespace

std::string render(const Formula& f, RenderStyle style) {
  std::string out;
  render_into(style == RenderStyle::Core ? f : resugar(f), 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Desugaring

namespace {

class Desugarer {
 public:
  Formula run(const Formula& f) {
    if (f.is_core()) return f;
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Formula r = expand(f);
    memo_.emplace(f.id(), r);
    return r;
  }

 private:
  static Formula N(const Formula& a) { return Formula::dpar(Formula::half(), a); }
  static Formula Nab(const Formula& a) { return Formula::dpar(a, Formula::zero()); }

  Formula expand(const Formula& f) {
    const Formula h = Formula::half(), z = Formula::zero();
    switch (f.op()) {
      case Op::Const1: return Formula::dpar(h, z);
      case Op::Neg: return N(run(f.operand()));
      case Op::Nabla: return Nab(run(f.operand()));
      case Op::Delta: return N(Nab(N(run(f.operand()))));
      case Op::Vee: return N(Formula::meet(N(run(f.lhs())), N(run(f.rhs()))));
      case Op::Flip: {
        const Formula a = run(f.operand());
        return Formula::join(Nab(a), Nab(Formula::dpar(z, a)));
      }
      case Op::Arrow: {
        const Formula a = run(f.lhs());
        const Formula b = run(f.rhs());
        const Formula p = Formula::join(b, Nab(N(a)));
        const Formula q = Formula::join(b, N(Nab(a)));
        return Formula::meet(Formula::meet(Formula::meet(p, q), N(p)), N(q));
      }
      case Op::Join:
      case Op::Dpar:
      case Op::Meet:
        return Formula::make(f.op(), {run(f.lhs()), run(f.rhs())});
      default:
        return f;
    }
  }

  std::unordered_map<const void*, Formula> memo_;
};

bool is_half(const Formula& f) { return f.op() == Op::ConstHalf; }
bool is_zero(const Formula& f) { return f.op() == Op::Const0; }

/// d(h, a) -> a
std::optional<Formula> match_neg(const Formula& f) {
  if (f.op() == Op::Dpar && is_half(f.lhs())) return f.rhs();
  return std::nullopt;
}

/// d(a, 0) -> a
std::optional<Formula> match_nabla(const Formula& f) {
  if (f.op() == Op::Dpar && is_zero(f.rhs())) return f.lhs();
  return std::nullopt;
}

Formula resugar_core(const Formula& f) {
  const Formula h = Formula::half(), z = Formula::zero();
  // Arrow: ((P & Q) & !P) & !Q with P = b # N !a, Q = b # !N a.
  if (f.op() == Op::Meet && f.lhs().op() == Op::Meet && f.lhs().lhs().op() == Op::Meet) {
    const Formula p = f.lhs().lhs().lhs();
    const Formula q = f.lhs().lhs().rhs();
    if (p.op() == Op::Join) {
      if (auto na = match_nabla(p.rhs())) {
        if (auto a = match_neg(*na)) {
          const Formula b = p.lhs();
          const Formula q_expect = Formula::join(b, Formula::dpar(h, Formula::dpar(*a, z)));
          if (q == q_expect && f.lhs().rhs() == Formula::dpar(h, p) && f.rhs() == Formula::dpar(h, q)) {
            return Formula::arrow(resugar_core(*a), resugar_core(b));
          }
        }
      }
    }
  }
  // Flip: d(a,0) # d(d(0,a),0)
  if (f.op() == Op::Join) {
    if (auto a = match_nabla(f.lhs())) {
      if (auto inner = match_nabla(f.rhs())) {
        if (inner->op() == Op::Dpar && is_zero(inner->lhs()) && inner->rhs() == *a) {
          return Formula::flip(resugar_core(*a));
        }
      }
    }
  }
  if (auto body = match_neg(f)) {
    // Vee: d(h, d(h,l) & d(h,r))
    if (body->op() == Op::Meet) {
      auto l = match_neg(body->lhs());
      auto r = match_neg(body->rhs());
      if (l && r) return Formula::vee(resugar_core(*l), resugar_core(*r));
    }
    // Delta: d(h, d(d(h,a),0))
    if (auto nb = match_nabla(*body)) {
      if (auto a = match_neg(*nb)) return Formula::delta(resugar_core(*a));
    }
    if (is_zero(*body)) return Formula::one();
    return Formula::neg(resugar_core(*body));
  }
  if (auto a = match_nabla(f)) return Formula::nabla(resugar_core(*a));
  if (op_arity(f.op()) == 2) {
    return Formula::make(f.op(), {resugar_core(f.lhs()), resugar_core(f.rhs())});
  }
  return f;
}

}  // namespace

Formula desugar(const Formula& f) { return Desugarer{}.run(f); }

Formula resugar(const Formula& f) { return resugar_core(desugar(f)); }

Formula substitute(const Formula& f, const std::vector<Formula>& args) {
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto&& self, const Formula& g) -> Formula {
    if (g.max_var() == 0) return g;
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula r;
    if (g.op() == Op::Var) {
      r = static_cast<std::size_t>(g.index()) <= args.size() ? args[static_cast<std::size_t>(g.index() - 1)] : g;
    } else if (op_arity(g.op()) == 1) {
      r = Formula::make(g.op(), {self(self, g.operand())});
    } else {
      r = Formula::make(g.op(), {self(self, g.lhs()), self(self, g.rhs())});
    }
    memo.emplace(g.id(), r);
    return r;
  };
  return go(go, f);
}

// ---------------------------------------------------------------------------
// PostFormula

namespace {

using PostNodePtr = std::shared_ptr<const PostFormula::Node>;

PostNodePtr post_leaf(PostOp op) {
  auto n = std::make_shared<PostFormula::Node>();
  n->op = op;
  return n;
}

PostNodePtr post_node(PostOp op, PostNodePtr l, PostNodePtr r) {
  auto n = std::make_shared<PostFormula::Node>();
  n->op = op;
  n->size = 1 + l->size + (r ? r->size : 0);
  n->max_var = std::max(l->max_var, r ? r->max_var : 0);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

PostFormula::PostFormula() : PostFormula(zero()) {}

PostFormula PostFormula::zero() {
  static const PostNodePtr n = post_leaf(PostOp::Const0);
  return PostFormula(n);
}
PostFormula PostFormula::half() {
  static const PostNodePtr n = post_leaf(PostOp::ConstHalf);
  return PostFormula(n);
}
PostFormula PostFormula::one() {
  static const PostNodePtr n = post_leaf(PostOp::Const1);
  return PostFormula(n);
}
PostFormula PostFormula::var(int index) { return var("X" + std::to_string(index), index); }
PostFormula PostFormula::var(std::string name, int index) {
  if (index < 1) throw InputError("variable index must be positive");
  auto n = std::make_shared<Node>();
  n->op = PostOp::Var;
  n->index = index;
  n->name = std::move(name);
  n->max_var = index;
  return PostFormula(std::move(n));
}
PostFormula PostFormula::neg(PostFormula a) { return PostFormula(post_node(PostOp::Neg, a.node_, nullptr)); }
PostFormula PostFormula::nabla(PostFormula a) {
  return PostFormula(post_node(PostOp::Nabla, a.node_, nullptr));
}
PostFormula PostFormula::vee(PostFormula a, PostFormula b) {
  return PostFormula(post_node(PostOp::Vee, a.node_, b.node_));
}
PostFormula PostFormula::meet(PostFormula a, PostFormula b) {
  return PostFormula(post_node(PostOp::Meet, a.node_, b.node_));
}

PostOp PostFormula::op() const { return node_->op; }
PostFormula PostFormula::lhs() const { return PostFormula(node_->lhs); }
PostFormula PostFormula::rhs() const { return PostFormula(node_->rhs); }
const std::string& PostFormula::name() const { return node_->name; }
int PostFormula::index() const { return node_->index; }
std::size_t PostFormula::size() const { return node_->size; }
int PostFormula::max_var() const { return node_->max_var; }

bool operator==(const PostFormula& a, const PostFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.size != y.size) return false;
  switch (x.op) {
    case PostOp::Var: return x.index == y.index && x.name == y.name;
    case PostOp::Neg:
    case PostOp::Nabla: return a.lhs() == b.lhs();
    case PostOp::Vee:
    case PostOp::Meet: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default: return true;
  }
}

PostFormula as_post(const Formula& f) {
  switch (f.op()) {
    case Op::Const0: return PostFormula::zero();
    case Op::ConstHalf: return PostFormula::half();
    case Op::Const1: return PostFormula::one();
    case Op::Var: return PostFormula::var(f.name(), f.index());
    case Op::Neg: return PostFormula::neg(as_post(f.operand()));
    case Op::Nabla: return PostFormula::nabla(as_post(f.operand()));
    case Op::Delta:
      return PostFormula::neg(PostFormula::nabla(PostFormula::neg(as_post(f.operand()))));
    case Op::Vee: return PostFormula::vee(as_post(f.lhs()), as_post(f.rhs()));
    case Op::Meet: return PostFormula::meet(as_post(f.lhs()), as_post(f.rhs()));
    default:
      throw InputError("connective '" + std::string(op_name(f.op())) +
                       "' is not in the Post signature (0, h, 1, !, N, |, &)");
  }
}

PostFormula parse_post(std::string_view text) { return as_post(parse(text)); }

namespace {

int post_precedence(PostOp op) {
  switch (op) {
    case PostOp::Vee: return 2;
    case PostOp::Meet: return 4;
    case PostOp::Neg:
    case PostOp::Nabla: return 5;
    default: return 6;
  }
}

void render_post_into(const PostFormula& f, int min_prec, std::string& out) {
  const int p = post_precedence(f.op());
  const bool paren = p < min_prec;
  if (paren) out.push_back('(');
  switch (f.op()) {
    case PostOp::Const0: out += "0"; break;
    case PostOp::ConstHalf: out += "h"; break;
    case PostOp::Const1: out += "1"; break;
    case PostOp::Var: out += f.name(); break;
    case PostOp::Neg:
      out += "!";
      render_post_into(f.operand(), 5, out);
      break;
    case PostOp::Nabla:
      out += "N ";
      render_post_into(f.operand(), 5, out);
      break;
    case PostOp::Vee:
    case PostOp::Meet:
      render_post_into(f.lhs(), p, out);
      out += f.op() == PostOp::Vee ? " | " : " & ";
      render_post_into(f.rhs(), p + 1, out);
      break;
  }
  if (paren) out.push_back(')');
}

}  // namespace

std::string render(const PostFormula& f) {
  std::string out;
  render_post_into(f, 0, out);
  return out;
}

PostFormula substitute(const PostFormula& f, const std::vector<PostFormula>& args) {
  std::unordered_map<const void*, PostFormula> memo;
  auto go = [&](auto&& self, const PostFormula& g) -> PostFormula {
    if (g.max_var() == 0) return g;
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    PostFormula r;
    switch (g.op()) {
      case PostOp::Var:
        r = static_cast<std::size_t>(g.index()) <= args.size() ? args[static_cast<std::size_t>(g.index() - 1)] : g;
        break;
      case PostOp::Neg: r = PostFormula::neg(self(self, g.operand())); break;
      case PostOp::Nabla: r = PostFormula::nabla(self(self, g.operand())); break;
      case PostOp::Vee: r = PostFormula::vee(self(self, g.lhs()), self(self, g.rhs())); break;
      case PostOp::Meet: r = PostFormula::meet(self(self, g.lhs()), self(self, g.rhs())); break;
      default: r = g; break;
    }
    memo.emplace(g.id(), r);
    return r;
  };
  return go(go, f);
}

}  // namespace rmlogic
