#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmlogic/trit.hpp"

namespace rmlogic {

/// Largest arity for which whole truth tables are materialized (3^16 cells).
inline constexpr int kMaxArity = 16;

/// 3^m, throwing ArityError above kMaxArity.
std::uint64_t pow3(int m);

/// A point of {0,1/2,1}^m. The index reads the digits in base 3 with X1 most
/// significant and digit map 0 -> 0, 1/2 -> 1, 1 -> 2.
class Valuation {
 public:
  Valuation(int arity, std::uint64_t index);
  explicit Valuation(std::vector<Trit> digits);

  int arity() const { return static_cast<int>(digits_.size()); }
  std::uint64_t index() const { return index_; }
  const std::vector<Trit>& digits() const { return digits_; }

  /// Value of variable X<var>, 1-based.
  Trit at(int var) const;

  /// "0h1" style word.
  std::string word() const;
  /// "X1=0 X2=h" style assignment listing.
  std::string assignment() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Trit> digits_;
  std::uint64_t index_ = 0;
};

/// Total function {0,1/2,1}^m -> {0,1/2,1}, stored as two bit planes over the
/// valuation index range: zero_plane marks cells equal to 0, one_plane cells
/// equal to 1, and cells in neither plane are 1/2. Bits past size() are
/// always clear.
class TruthTable {
 public:
  TruthTable() : TruthTable(0, Trit::Zero) {}
  explicit TruthTable(int arity, Trit fill = Trit::Zero);

  static TruthTable constant(int arity, Trit value) { return TruthTable(arity, value); }
  /// Coordinate function of X<var> (1-based) at the given arity.
  static TruthTable coordinate(int arity, int var);
  /// Row of 3^m symbols from {0,h,1}; the arity is inferred from the length.
  static TruthTable from_row(std::string_view row);
  /// Text format: "m=<arity>" line followed by the row line.
  static TruthTable parse_text(std::string_view text);
  /// Row from per-index values.
  static TruthTable from_values(int arity, std::span<const Trit> values);

  int arity() const { return arity_; }
  std::uint64_t size() const { return size_; }

  Trit get(std::uint64_t i) const;
  void set(std::uint64_t i, Trit value);
  Trit operator[](std::uint64_t i) const { return get(i); }

  std::string row() const;
  std::string to_text() const;
  std::vector<Trit> values() const;

  bool is_constant(Trit value) const;
  /// Least index whose value differs from `value`.
  std::optional<std::uint64_t> first_not(Trit value) const;
  std::uint64_t count(Trit value) const;

  std::span<const std::uint64_t> zero_plane() const { return zero_; }
  std::span<const std::uint64_t> one_plane() const { return one_; }
  /// Plane marking the 1/2 cells.
  std::vector<std::uint64_t> half_plane() const;

  /// Packs the value sequence into an integer (base 3, first cell most
  /// significant). Only for arity <= 3.
  std::uint64_t code() const;
  static TruthTable from_code(int arity, std::uint64_t code);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  // Raw plane construction used by the pointwise operators.
  TruthTable(int arity, std::vector<std::uint64_t> zero, std::vector<std::uint64_t> one);
  std::uint64_t last_word_mask() const;

 private:
  int arity_ = 0;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> zero_;
  std::vector<std::uint64_t> one_;
};

// Pointwise operations, computed plane-wise.
TruthTable join(const TruthTable& a, const TruthTable& b);
TruthTable dpar(const TruthTable& a, const TruthTable& b);
TruthTable meet(const TruthTable& a, const TruthTable& b);
TruthTable vee(const TruthTable& a, const TruthTable& b);
TruthTable neg(const TruthTable& a);
TruthTable nabla(const TruthTable& a);
TruthTable delta(const TruthTable& a);

/// Pointwise Rota-Metropolis intersection; nullopt if some cell clashes.
std::optional<TruthTable> meet_partial(const TruthTable& a, const TruthTable& b);
/// Least valuation index where {a(v), b(v)} == {0, 1}.
std::optional<std::uint64_t> first_clash(const TruthTable& a, const TruthTable& b);
/// Pointwise face inclusion (a join b == b).
bool below(const TruthTable& a, const TruthTable& b);
/// Least index where below(a(v), b(v)) fails.
std::optional<std::uint64_t> first_not_below(const TruthTable& a, const TruthTable& b);

/// Reinterprets a table at a larger arity by adding trailing variables that
/// the function ignores.
TruthTable extend_arity(const TruthTable& t, int arity);

}  // namespace rmlogic
