#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmlogic/trit.hpp"

namespace rmlogic {

/// Operation of arity <= 2 on {0,h,1}, stored as a binary table indexed by
/// (x, y) with x the row. Unary operations ignore y; constants ignore both.
using BinaryOp = std::array<Trit, 9>;

BinaryOp op_from_unary(const std::array<Trit, 3>& f);
BinaryOp op_constant(Trit c);
BinaryOp projection(int which);
/// Named operations: 0, h, 1, join, dpar, meet, vee, neg, nabla, delta,
/// flip, p1, p2. Also accepts a 9-symbol row (binary) or a 3-symbol row
/// (unary). Throws InputError otherwise.
BinaryOp named_op(std::string_view name);
std::string op_row(const BinaryOp& op);
/// Table code in [0, 3^9).
std::uint32_t op_code(const BinaryOp& op);

/// Closure of the projections and the generators under composition within
/// arity 2: h(f(x,y), g(x,y)) for each binary generator h and members f, g,
/// and u(f(x,y)) for each unary or constant generator u. Iterated to a
/// fixpoint.
class Clone {
 public:
  /// Generators by name, see named_op().
  explicit Clone(const std::vector<std::string>& generators);
  std::size_t size() const { return members_.size(); }
  bool contains(const BinaryOp& op) const;
  const std::vector<BinaryOp>& members() const { return members_; }
  /// Members that ignore y.
  std::vector<BinaryOp> unary_members() const;
  int rounds() const { return rounds_; }
  /// A term over the generators (variables x, y) that builds `op`, or
  /// nullopt if op is not a member.
  std::optional<std::string> term_for(const BinaryOp& op) const;

 private:
  struct Origin {
    int generator = -1;  // -1 for a projection
    std::size_t f = 0;
    std::size_t g = 0;
  };
  std::string render_member(std::size_t i) const;

  std::vector<std::string> names_;
  std::vector<BinaryOp> members_;
  std::vector<Origin> origin_;
  std::vector<std::int32_t> position_;
  int rounds_ = 0;
};

/// Searches all pairs of unary f, g for f(x) # g(y) == x & y. Returns the
/// first pair found or nullopt.
std::optional<std::pair<std::array<Trit, 3>, std::array<Trit, 3>>> join_shape_for_min();
/// Same for d(f(x), g(y)).
std::optional<std::pair<std::array<Trit, 3>, std::array<Trit, 3>>> dpar_shape_for_min();

}  // namespace rmlogic
