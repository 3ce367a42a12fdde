#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmlogic {

/// Connectives. The core language is {Const0, ConstHalf, Var, Join, Dpar,
/// Meet}; the remaining kinds are sugar removed by desugar().
enum class Op : std::uint8_t {
  Const0,
  ConstHalf,
  Const1,
  Var,
  Join,
  Dpar,
  Meet,
  Neg,
  Nabla,
  Delta,
  Vee,
  Flip,
  Arrow,
};

int op_arity(Op op);
bool is_core(Op op);
/// Stable lower-case name used by the JSON AST ("join", "dpar", ...).
std::string_view op_name(Op op);
std::optional<Op> op_from_name(std::string_view name);

/// Immutable formula tree with shared subterms. Copies are cheap.
class Formula {
 public:
  struct Node;

  /// The constant 0.
  Formula();

  static Formula zero();
  static Formula half();
  static Formula one();
  /// X<index>, named "X<index>".
  static Formula var(int index);
  static Formula var(std::string name, int index);
  static Formula join(Formula a, Formula b);
  static Formula dpar(Formula a, Formula b);
  static Formula meet(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula nabla(Formula a);
  static Formula delta(Formula a);
  static Formula vee(Formula a, Formula b);
  static Formula flip(Formula a);
  static Formula arrow(Formula a, Formula b);
  /// Generic constructor; `args` must match op_arity(op). Not for Var.
  static Formula make(Op op, std::vector<Formula> args);

  Op op() const;
  /// Children: none, one (operand) or two (lhs, rhs).
  std::size_t arity() const { return static_cast<std::size_t>(op_arity(op())); }
  Formula lhs() const;
  Formula rhs() const;
  Formula operand() const { return lhs(); }
  const std::string& name() const;
  int index() const;

  /// Number of nodes.
  std::size_t size() const;
  /// Largest variable index, 0 for closed formulas.
  int max_var() const;
  bool is_core() const;

  /// Identity of the shared node, for memoization keyed on subterms.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op = Op::Const0;
  int index = 0;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t size = 1;
  int max_var = 0;
  bool core = true;
};

/// Maps identifiers to 1-based variable indices. Names of the form X<k>
/// (k >= 1, no leading zero) get index k; any other identifier is numbered
/// after the largest X-index, in order of first occurrence.
class VarMap {
 public:
  VarMap() = default;
  /// Builds the map from identifiers in first-occurrence order.
  static VarMap from_names(const std::vector<std::string>& names);

  std::optional<int> find(std::string_view name) const;
  /// Name of an index; "X<k>" when the index was not named explicitly.
  std::string name_of(int index) const;
  const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }
  int max_index() const;

 private:
  std::vector<std::pair<std::string, int>> entries_;
};

/// Parses one formula. Grammar, loosest first: `~>`, `|`, `#`, `&`, then
/// the prefixes `!`, `N`, `T`, `F`; binary operators associate to the left.
/// Atoms are `0`, `h`, `1/2`, `1`, identifiers, `( ... )` and `d(a,b)`.
Formula parse(std::string_view text);
/// Parses several formulas that share one variable numbering.
std::vector<Formula> parse_all(const std::vector<std::string>& texts, VarMap* map_out = nullptr);
/// Parses against a fixed map; unknown identifiers are an error.
Formula parse_with(std::string_view text, const VarMap& map);
/// Identifiers in order of first occurrence (lexing only).
std::vector<std::string> identifiers(std::string_view text);

enum class RenderStyle { Core, Sugared };

/// Core renders every node as it is, so parse(render(f, Core)) == f.
/// Sugared renders resugar(desugar(f)).
std::string render(const Formula& f, RenderStyle style = RenderStyle::Core);

/// Rewrites every sugar node into {0, h, Var, #, d, &}.
Formula desugar(const Formula& f);
/// Recognizes the expansions produced by desugar and folds them back into
/// sugar nodes (top-down, largest pattern first).
Formula resugar(const Formula& f);

/// Replaces X<i> by args[i-1]. Variables beyond args.size() are kept.
Formula substitute(const Formula& f, const std::vector<Formula>& args);

// ---------------------------------------------------------------------------
// Post signature: 0, 1/2, 1, neg, nabla, vee, meet.

enum class PostOp : std::uint8_t { Const0, ConstHalf, Const1, Var, Neg, Nabla, Vee, Meet };

class PostFormula {
 public:
  struct Node;

  PostFormula();

  static PostFormula zero();
  static PostFormula half();
  static PostFormula one();
  static PostFormula var(int index);
  static PostFormula var(std::string name, int index);
  static PostFormula neg(PostFormula a);
  static PostFormula nabla(PostFormula a);
  static PostFormula vee(PostFormula a, PostFormula b);
  static PostFormula meet(PostFormula a, PostFormula b);

  PostOp op() const;
  PostFormula lhs() const;
  PostFormula rhs() const;
  PostFormula operand() const { return lhs(); }
  const std::string& name() const;
  int index() const;
  std::size_t size() const;
  int max_var() const;
  const void* id() const { return node_.get(); }

  friend bool operator==(const PostFormula& a, const PostFormula& b);

 private:
  explicit PostFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct PostFormula::Node {
  PostOp op = PostOp::Const0;
  int index = 0;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t size = 1;
  int max_var = 0;
};

/// Post formulas use the same surface syntax restricted to 0, h, 1,
/// variables, `!`, `N`, `|` and `&`.
PostFormula parse_post(std::string_view text);
/// Converts a parsed formula whose connectives all belong to the Post
/// signature; Delta is accepted as !N!. Throws InputError otherwise.
PostFormula as_post(const Formula& f);
std::string render(const PostFormula& f);
PostFormula substitute(const PostFormula& f, const std::vector<PostFormula>& args);

}  // namespace rmlogic
