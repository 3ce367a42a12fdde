#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rmlogic {

/// An element of {0, 1/2, 1}. The enumerator order is an indexing order
/// (it coincides with the numeric order 0 < 1/2 < 1), not the face order.
enum class Trit : std::uint8_t { Zero = 0, Half = 1, One = 2 };

inline constexpr std::array<Trit, 3> kAllTrits{Trit::Zero, Trit::Half, Trit::One};

constexpr int index_of(Trit t) { return static_cast<int>(t); }
constexpr Trit trit_from_index(int i) { return static_cast<Trit>(i); }

namespace detail {
using TritTable2 = std::array<std::array<Trit, 3>, 3>;
using TritTable1 = std::array<Trit, 3>;

inline constexpr Trit Z = Trit::Zero;
inline constexpr Trit H = Trit::Half;
inline constexpr Trit O = Trit::One;

// rows: x, columns: y
inline constexpr TritTable2 kJoin{{{Z, H, H}, {H, H, H}, {H, H, O}}};
inline constexpr TritTable2 kDpar{{{Z, H, Z}, {O, H, Z}, {O, H, O}}};
inline constexpr TritTable2 kMin{{{Z, Z, Z}, {Z, H, H}, {Z, H, O}}};
inline constexpr TritTable2 kMax{{{Z, H, O}, {H, H, O}, {O, O, O}}};
inline constexpr TritTable1 kNeg{O, H, Z};
inline constexpr TritTable1 kNabla{Z, O, O};
inline constexpr TritTable1 kDelta{Z, Z, O};
}  // namespace detail

constexpr Trit join(Trit x, Trit y) { return detail::kJoin[index_of(x)][index_of(y)]; }
constexpr Trit dpar(Trit x, Trit y) { return detail::kDpar[index_of(x)][index_of(y)]; }
constexpr Trit meet(Trit x, Trit y) { return detail::kMin[index_of(x)][index_of(y)]; }
constexpr Trit vee(Trit x, Trit y) { return detail::kMax[index_of(x)][index_of(y)]; }
constexpr Trit neg(Trit x) { return detail::kNeg[index_of(x)]; }
constexpr Trit nabla(Trit x) { return detail::kNabla[index_of(x)]; }
constexpr Trit delta(Trit x) { return detail::kDelta[index_of(x)]; }

/// 0 -> 0, 1/2 -> 1, 1 -> 1/2, computed through join and dpar.
constexpr Trit flip(Trit x) {
  return join(dpar(x, Trit::Zero), dpar(dpar(Trit::Zero, x), Trit::Zero));
}

/// Rota-Metropolis intersection; nullopt exactly on the clash {0, 1}.
constexpr std::optional<Trit> meet_partial(Trit x, Trit y) {
  if ((x == Trit::Zero && y == Trit::One) || (x == Trit::One && y == Trit::Zero)) {
    return std::nullopt;
  }
  return x == Trit::Half ? y : x;
}

/// Face inclusion: x is contained in y iff x join y == y.
constexpr bool below(Trit x, Trit y) { return join(x, y) == y; }

/// Sharpening order: x <= y <= neg(y) or x >= y >= neg(y), numerically.
constexpr bool sharper(Trit x, Trit y) {
  const int a = index_of(x), b = index_of(y), nb = index_of(neg(y));
  return (a <= b && b <= nb) || (a >= b && b >= nb);
}

constexpr bool is_boolean(Trit x) { return x != Trit::Half; }

/// Clash test used by compatibility: {x, y} == {0, 1}.
constexpr bool clash(Trit x, Trit y) { return !meet_partial(x, y).has_value(); }

/// Textual symbols: '0', 'h', '1'.
char to_char(Trit t);
std::string to_string(Trit t);

/// Accepts "0", "h", "1/2", "1".
Trit parse_trit(std::string_view text);
std::optional<Trit> trit_from_char(char c);

}  // namespace rmlogic
