#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rmlogic/formula.hpp"
#include "rmlogic/truth_table.hpp"

namespace rmlogic {

// ---------------------------------------------------------------------------
// Evaluation

/// Value of f at v by structural recursion on trits.
Trit eval(const Formula& f, const Valuation& v);
Trit eval(const PostFormula& f, const Valuation& v);

/// Whole truth table at arity m, computed plane-wise. Shared subterms are
/// tabulated once.
TruthTable table(const Formula& f, int m);
TruthTable table(const PostFormula& f, int m);

/// Table equality at arity max(max_var(f), max_var(g), m).
bool equivalent(const Formula& f, const Formula& g, int m = 0);

/// f is a tautology iff its table is constantly 1/2.
bool is_tautology(const Formula& f);
/// Every Post-table entry is 1.
bool post_tautology(const PostFormula& b);

// ---------------------------------------------------------------------------
// Premise sets

/// Finite ordered premise set; structural duplicates are dropped on insert.
class Theory {
 public:
  Theory() = default;
  Theory(std::initializer_list<Formula> fs);
  explicit Theory(const std::vector<Formula>& fs);

  void add(const Formula& f);
  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }
  int max_var() const;

 private:
  std::vector<Formula> formulas_;
};

enum class Mode { Compatible, Incompatible };

/// How a premise clash is recognized.
///  - Clash: two premises take the values {0, 1} at one valuation.
///  - Literal: theta1(v) = 1 - theta2(v), with theta1 and theta2 not
///    necessarily distinct, so a premise that takes the value 1/2 clashes
///    with itself.
enum class IncompatibilityReading { Clash, Literal };

struct Witness {
  Valuation valuation;
  /// 0-based premise indices; empty for a plain counterexample.
  std::vector<std::size_t> premises;
};

struct Verdict {
  bool holds = false;
  Mode mode = Mode::Compatible;
  std::optional<Witness> witness;
};

struct CompatibilityResult {
  Mode mode = Mode::Compatible;
  /// Least (valuation, i, j) with i <= j when incompatible.
  std::optional<Witness> witness;
  bool compatible() const { return mode == Mode::Compatible; }
};

/// Arity used for a premise set plus goal: the largest variable index, or
/// `override_arity` when given (which must be at least that large).
int arity_for(const Theory& t, const Formula& f, std::optional<int> override_arity = std::nullopt);

CompatibilityResult compatibility(const Theory& t, std::optional<int> arity = std::nullopt,
                                  IncompatibilityReading reading = IncompatibilityReading::Clash);

/// The consequence relation. Incompatible premises entail everything;
/// otherwise at every valuation the goal is 1/2 or some premise takes the
/// goal's boolean value there. A failing verdict carries the least
/// counterexample valuation.
Verdict entails(const Theory& t, const Formula& f, std::optional<int> arity = std::nullopt,
                IncompatibilityReading reading = IncompatibilityReading::Clash);

/// Same relation through the pointwise intersection of the premise tables:
/// (t1 meet ... meet tk) join f == f. Throws PreconditionError on
/// incompatible premises.
Verdict entails_via_meet(const Theory& t, const Formula& f, std::optional<int> arity = std::nullopt);

/// Formula whose table is the pointwise intersection of the tables of t1
/// and t2:  !N(!t1 & !t2) | (h & N(t1 & !t1) & N(t2 & !t2)).
/// Throws PreconditionError if {t1, t2} is incompatible.
Formula meet_formula(const Formula& t1, const Formula& t2);

/// (b # N !a) & (b # !N a) & !(b # N !a) & !(b # !N a), which is a tautology
/// exactly when a entails b.
Formula consequence_formula(const Formula& a, const Formula& b);
bool entails_via_reduction(const Formula& a, const Formula& b);
/// Table equality via the two-sided reduction formula.
bool equivalent_via_reduction(const Formula& a, const Formula& b);

/// flip applied to the RM translation of b: d(b',0) # d(d(0,b'),0).
/// b is a Post tautology iff the result is an RM tautology.
Formula reduce_post_to_rm(const PostFormula& b);

/// Finite subset of t that still entails f, built by covering every
/// valuation where f is boolean with the first premise taking the same
/// value there. Premises keep their original order.
/// When the premises entail f only by explosion, the least clashing pair is
/// returned. Throws PreconditionError when t does not entail f.
Theory compactness_core(const Theory& t, const Formula& f, std::optional<int> arity = std::nullopt);

struct NonmonotonicityWitness {
  Formula alpha;
  Formula beta;
  Formula gamma;
};

/// {a} entails g while {a & b} does not.
bool is_nonmonotonicity_witness(const Formula& a, const Formula& b, const Formula& g);

/// Smallest-first search over formulas in X1..Xm. Throws InvariantError if
/// nothing is found.
NonmonotonicityWitness nonmonotonicity_witness(int m);

}  // namespace rmlogic
