#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmlogic/term.hpp"
#include "rmlogic/truth_table.hpp"

namespace rmlogic {

/// Finite algebra on {0..size-1} with named constants and operation tables.
/// Binary tables are row-major: op[x * size + y].
struct FiniteAlgebra {
  int size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, std::vector<int>> unops;
  std::map<std::string, std::vector<int>> binops;
  /// Optional element names (e.g. face words), same length as size or empty.
  std::vector<std::string> labels;

  int constant(const std::string& name) const;
  int apply(const std::string& op, int a) const;
  int apply(const std::string& op, int a, int b) const;
  std::string label(int e) const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size == b.size && a.constants == b.constants && a.unops == b.unops && a.binops == b.binops;
  }
};

/// Value of t under an assignment of carrier elements to variables.
int evaluate(const FiniteAlgebra& a, const Term& t, const std::vector<int>& assignment);

struct AxiomFailure {
  std::size_t equation = 0;
  std::string label;
  std::vector<int> assignment;
  int lhs_value = 0;
  int rhs_value = 0;
};

struct AxiomReport {
  bool pass = true;
  std::optional<AxiomFailure> failure;
};

/// Exhaustive check; assignments are scanned in lexicographic order and the
/// first failing one is reported. Throws InputError when an equation uses a
/// symbol the algebra lacks.
AxiomReport check_axioms(const FiniteAlgebra& a, const AxiomSet& s);
std::string describe(const AxiomSet& s, const AxiomFailure& f, const FiniteAlgebra& a);

/// Three-element algebras with elements ordered 0, h, 1.
FiniteAlgebra z_post();
FiniteAlgebra z_rm();
/// Faces of the n-cube with pointwise RM operations, elements in word index
/// order. n <= 4.
FiniteAlgebra faces_algebra(int n);
/// Same with the Post operations.
FiniteAlgebra faces_post_algebra(int n);
/// Direct product; both factors must have the same signature. Element
/// (i, j) has index i * |b| + j.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// RM -> Post: one = d(h,0), neg = d(h,x), nabla = d(x,0),
/// vee = !(!x & !y). Throws InvariantError if `a` fails rm_axioms().
FiniteAlgebra derive_post(const FiniteAlgebra& a);
/// Post -> RM: join and dpar through their Post terms. Throws
/// InvariantError if `a` fails post_axioms().
FiniteAlgebra derive_rm(const FiniteAlgebra& a);

inline constexpr int kIsoSizeBound = 81;

/// An isomorphism a -> b as the image of each element, or nullopt. Requires
/// identical signatures. Throws PreconditionError above kIsoSizeBound.
std::optional<std::vector<int>> iso_check(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Free RM algebra on m generators: all arity-m truth tables. Elements are
/// table codes (arity <= 2).
class FreeRm {
 public:
  explicit FreeRm(int m);
  int arity() const { return m_; }
  /// 3^(3^m).
  std::uint64_t size() const;
  TruthTable element(std::uint64_t code) const { return TruthTable::from_code(m_, code); }
  std::vector<TruthTable> generators() const;
  /// Explicit algebra, only for m <= 1.
  FiniteAlgebra materialize() const;

 private:
  int m_;
};
FreeRm free_rm(int m);

/// Closure of a set of same-arity tables under 0, h, join, dpar, meet.
std::vector<TruthTable> rm_closure(const std::vector<TruthTable>& generators);

/// Text format:
///   carrier: k
///   const <name> = <i>
///   unop <name>: k entries
///   binop <name>: k*k entries, row-major
/// Entries are whitespace separated; lines starting with '#' are comments.
FiniteAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const FiniteAlgebra& a);

}  // namespace rmlogic
