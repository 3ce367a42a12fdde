#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmlogic/algebra.hpp"
#include "rmlogic/formula.hpp"
#include "rmlogic/semantics.hpp"

namespace rmlogic {

/// Valuations (indices into {0,h,1}^m) where every premise and h take the
/// value h.
struct ModSet {
  int m = 0;
  std::vector<std::uint64_t> valuations;
  std::size_t size() const { return valuations.size(); }
};

ModSet mod_set(const Theory& t, int m);

/// Restriction of a table to the valuations of a ModSet, as a word.
std::vector<Trit> restrict_to(const TruthTable& t, const ModSet& mod);

inline constexpr std::size_t kLindExplicitBound = 4;

struct Lindenbaum {
  ModSet mod;
  /// 3^|Mod|, or 1 when Mod is empty.
  std::uint64_t cardinality = 1;
  /// Explicit algebra on the restrictions when |Mod| <= kLindExplicitBound
  /// (one element when Mod is empty). Elements appear in order of the least
  /// table code restricting to them; labels are the words over Mod.
  std::optional<FiniteAlgebra> algebra;
  /// How the result was certified.
  std::string certificate;
};

/// For m <= 2 the carrier is collected from the restrictions of every
/// arity-m table; above that every word over Mod is taken directly.
Lindenbaum lind(const Theory& t, int m);

/// The algebra with one element, all constants and operations equal.
FiniteAlgebra trivial_rm_algebra();

// Two-valued side. Formulas use 0, 1, !, |, & and variables; a 1/2 or N
// anywhere is rejected. Valuations index {0,1}^m with X1 most significant.

std::vector<std::uint64_t> bool_mod(const std::vector<PostFormula>& t, int m);
/// All functions bool_mod -> {0,1} with pointwise zero, one, neg, vee, meet.
FiniteAlgebra bool_lind(const std::vector<PostFormula>& t, int m);
/// Subsets of {1..n} as bit masks with complement, union, intersection.
FiniteAlgebra powerset_algebra(int n);

struct RowResult {
  int row = 0;
  std::string description;
  bool pass = false;
  std::string counts;
};

struct TableReport {
  int table = 0;
  int m = 0;
  std::vector<RowResult> rows;
  bool pass() const;
};

/// Machine check of the rows of the simplex table (1) or the cube table (2)
/// at arity m (1 or 2).
TableReport table_correspondence_check(int which, int m);
/// "row <k>: <description>: PASS|FAIL (<counts>)" lines.
std::string format_report(const TableReport& r);

}  // namespace rmlogic
