#pragma once

#include "rmlogic/formula.hpp"
#include "rmlogic/truth_table.hpp"

namespace rmlogic {

/// Post -> RM by the substitutions 1 = d(h,0), !a = d(h,a), N a = d(a,0),
/// a | b = !(!a & !b). The result is a core formula.
Formula to_rm(const PostFormula& p);

/// RM -> Post. The antipodal operation goes through the term
///   (h & N y & N !y) | (T x & T y) | (N x & T !y)
/// and the join goes through join_post_term(). d(a,0), d(h,a) and d(h,0)
/// are mapped directly to N a, !a and 1.
PostFormula to_post(const Formula& f);

/// Post term with the same table as X1 # X2, obtained by synthesize().
const PostFormula& join_post_term();
/// Post term for d(X1, X2).
const PostFormula& dpar_post_term();

/// Formula whose table is `t` (arity >= 1): a disjunction, over the cells
/// with non-zero value, of the value indicator conjunction of the cell, met
/// with h for 1/2 cells. Indicators: value 1 -> T x, value 0 -> T !x,
/// value 1/2 -> N x & N !x. An all-zero table yields the constant 0.
Formula synthesize(const TruthTable& t);

/// The right-hand side of the printed definition of join from Post
/// operations, taken literally:
///   (!N y & N y & h) | (T y & (h | T x)) | d(0, y).
/// This term does not reproduce the join table; see eq3_mismatches().
Formula eq3_literal(const Formula& x, const Formula& y);

struct CellMismatch {
  Trit x;
  Trit y;
  Trit expected;  // join(x, y)
  Trit actual;    // literal term at (x, y)
};

/// Cells where eq3_literal(X1, X2) disagrees with the join table, in
/// row-major (x, y) order.
std::vector<CellMismatch> eq3_mismatches();

}  // namespace rmlogic
