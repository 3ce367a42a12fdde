#include "rmlogic/truth_table.hpp"

#include <bit>
#include <cassert>
#include <sstream>

#include "rmlogic/errors.hpp"

namespace rmlogic {

namespace {

std::size_t word_count(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

bool test_bit(const std::vector<std::uint64_t>& plane, std::uint64_t i) {
  return (plane[i >> 6] >> (i & 63)) & 1u;
}

void assign_bit(std::vector<std::uint64_t>& plane, std::uint64_t i, bool on) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (on) {
    plane[i >> 6] |= bit;
  } else {
    plane[i >> 6] &= ~bit;
  }
}

void require_same_arity(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) {
    throw ArityError("truth tables of different arity (" + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()) + ")");
  }
}

template <typename Op>
TruthTable combine(const TruthTable& a, const TruthTable& b, Op op) {
  require_same_arity(a, b);
  const auto az = a.zero_plane(), ao = a.one_plane(), bz = b.zero_plane(), bo = b.one_plane();
  std::vector<std::uint64_t> z(az.size()), o(az.size());
  for (std::size_t w = 0; w < az.size(); ++w) {
    op(az[w], ao[w], bz[w], bo[w], z[w], o[w]);
  }
  return TruthTable(a.arity(), std::move(z), std::move(o));
}

}  // namespace

std::uint64_t pow3(int m) {
  if (m < 0 || m > kMaxArity) {
    throw ArityError("arity " + std::to_string(m) + " outside supported range 0.." +
                     std::to_string(kMaxArity));
  }
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= 3;
  return r;
}

Valuation::Valuation(int arity, std::uint64_t index) : digits_(static_cast<std::size_t>(arity)), index_(index) {
  const std::uint64_t n = pow3(arity);
  if (index >= n) {
    throw ArityError("valuation index " + std::to_string(index) + " out of range for arity " +
                     std::to_string(arity));
  }
  for (int i = arity - 1; i >= 0; --i) {
    digits_[static_cast<std::size_t>(i)] = trit_from_index(static_cast<int>(index % 3));
    index /= 3;
  }
}

Valuation::Valuation(std::vector<Trit> digits) : digits_(std::move(digits)) {
  pow3(arity());
  for (Trit t : digits_) index_ = index_ * 3 + static_cast<std::uint64_t>(index_of(t));
}

Trit Valuation::at(int var) const {
  if (var < 1 || var > arity()) {
    throw ArityError("variable X" + std::to_string(var) + " exceeds arity " + std::to_string(arity()));
  }
  return digits_[static_cast<std::size_t>(var - 1)];
}

std::string Valuation::word() const {
  std::string s;
  for (Trit t : digits_) s.push_back(to_char(t));
  return s;
}

std::string Valuation::assignment() const {
  std::string s;
  for (int i = 0; i < arity(); ++i) {
    if (i) s.push_back(' ');
    s += "X" + std::to_string(i + 1) + "=" + to_string(digits_[static_cast<std::size_t>(i)]);
  }
  return s;
}

TruthTable::TruthTable(int arity, Trit fill)
    : arity_(arity), size_(pow3(arity)), zero_(word_count(size_)), one_(word_count(size_)) {
  if (fill == Trit::Half) return;
  auto& plane = fill == Trit::Zero ? zero_ : one_;
  for (auto& w : plane) w = ~std::uint64_t{0};
  plane.back() &= last_word_mask();
}

TruthTable::TruthTable(int arity, std::vector<std::uint64_t> zero, std::vector<std::uint64_t> one)
    : arity_(arity), size_(pow3(arity)), zero_(std::move(zero)), one_(std::move(one)) {
  assert(zero_.size() == word_count(size_) && one_.size() == zero_.size());
  assert((zero_.back() & ~last_word_mask()) == 0 && (one_.back() & ~last_word_mask()) == 0);
}

std::uint64_t TruthTable::last_word_mask() const {
  const auto rem = size_ & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

TruthTable TruthTable::coordinate(int arity, int var) {
  if (var < 1 || var > arity) {
    throw ArityError("variable X" + std::to_string(var) + " exceeds arity " + std::to_string(arity));
  }
  TruthTable t(arity, Trit::Half);
  const std::uint64_t stride = pow3(arity - var);
  const std::uint64_t n = t.size();
  for (std::uint64_t base = 0; base < n; base += 3 * stride) {
    for (std::uint64_t k = 0; k < stride; ++k) {
      assign_bit(t.zero_, base + k, true);
      assign_bit(t.one_, base + 2 * stride + k, true);
    }
  }
  return t;
}

TruthTable TruthTable::from_row(std::string_view row) {
  int m = 0;
  std::uint64_t n = 1;
  while (n < row.size() && m < kMaxArity) {
    n *= 3;
    ++m;
  }
  if (n != row.size()) {
    throw InputError("truth table row length " + std::to_string(row.size()) + " is not a power of 3");
  }
  TruthTable t(m, Trit::Half);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto v = trit_from_char(row[i]);
    if (!v) {
      throw InputError(std::string("bad truth table symbol '") + row[i] + "' at position " +
                       std::to_string(i));
    }
    t.set(i, *v);
  }
  return t;
}

TruthTable TruthTable::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, row;
  if (!std::getline(in, header) || header.rfind("m=", 0) != 0) {
    throw InputError("truth table text must start with 'm=<arity>'");
  }
  int m = 0;
  try {
    m = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw InputError("bad arity in truth table header '" + header + "'");
  }
  std::getline(in, row);
  while (!row.empty() && (row.back() == '\r' || row.back() == ' ')) row.pop_back();
  TruthTable t = from_row(row);
  if (t.arity() != m) {
    throw InputError("truth table header says m=" + std::to_string(m) + " but row has " +
                     std::to_string(row.size()) + " cells");
  }
  return t;
}

TruthTable TruthTable::from_values(int arity, std::span<const Trit> values) {
  TruthTable t(arity, Trit::Half);
  if (values.size() != t.size()) throw InputError("value count does not match 3^arity");
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, values[i]);
  return t;
}

Trit TruthTable::get(std::uint64_t i) const {
  assert(i < size_);
  if (test_bit(zero_, i)) return Trit::Zero;
  if (test_bit(one_, i)) return Trit::One;
  return Trit::Half;
}

void TruthTable::set(std::uint64_t i, Trit value) {
  assert(i < size_);
  assign_bit(zero_, i, value == Trit::Zero);
  assign_bit(one_, i, value == Trit::One);
}

std::string TruthTable::row() const {
  std::string s;
  s.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) s.push_back(to_char(get(i)));
  return s;
}

std::string TruthTable::to_text() const { return "m=" + std::to_string(arity_) + "\n" + row() + "\n"; }

std::vector<Trit> TruthTable::values() const {
  std::vector<Trit> v(size_);
  for (std::uint64_t i = 0; i < size_; ++i) v[i] = get(i);
  return v;
}

std::vector<std::uint64_t> TruthTable::half_plane() const {
  std::vector<std::uint64_t> h(zero_.size());
  for (std::size_t w = 0; w < h.size(); ++w) h[w] = ~(zero_[w] | one_[w]);
  h.back() &= last_word_mask();
  return h;
}

bool TruthTable::is_constant(Trit value) const { return !first_not(value).has_value(); }

std::optional<std::uint64_t> TruthTable::first_not(Trit value) const {
  const auto mask = last_word_mask();
  for (std::size_t w = 0; w < zero_.size(); ++w) {
    std::uint64_t bad = 0;
    switch (value) {
      case Trit::Zero: bad = ~zero_[w]; break;
      case Trit::One: bad = ~one_[w]; break;
      case Trit::Half: bad = zero_[w] | one_[w]; break;
    }
    if (w + 1 == zero_.size()) bad &= mask;
    if (bad) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(bad));
  }
  return std::nullopt;
}

std::uint64_t TruthTable::count(Trit value) const {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < zero_.size(); ++w) {
    if (value == Trit::Zero) c += static_cast<std::uint64_t>(std::popcount(zero_[w]));
    if (value == Trit::One) c += static_cast<std::uint64_t>(std::popcount(one_[w]));
  }
  if (value == Trit::Half) c = size_ - count(Trit::Zero) - count(Trit::One);
  return c;
}

std::uint64_t TruthTable::code() const {
  if (arity_ > 3) throw ArityError("table code only defined for arity <= 3");
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < size_; ++i) c = c * 3 + static_cast<std::uint64_t>(index_of(get(i)));
  return c;
}

TruthTable TruthTable::from_code(int arity, std::uint64_t code) {
  if (arity > 3) throw ArityError("table code only defined for arity <= 3");
  TruthTable t(arity, Trit::Half);
  for (std::uint64_t i = t.size(); i-- > 0;) {
    t.set(i, trit_from_index(static_cast<int>(code % 3)));
    code /= 3;
  }
  return t;
}

TruthTable join(const TruthTable& a, const TruthTable& b) {
  return combine(a, b, [](auto az, auto ao, auto bz, auto bo, auto& z, auto& o) {
    z = az & bz;
    o = ao & bo;
  });
}

TruthTable dpar(const TruthTable& a, const TruthTable& b) {
  // The result is 1/2 exactly where b is 1/2. Where b is 0 the result is 0
  // iff a is 0; where b is 1 the result is 1 iff a is 1.
  return combine(a, b, [](auto az, auto ao, auto bz, auto bo, auto& z, auto& o) {
    z = (bz & az) | (bo & ~ao);
    o = (bz & ~az) | (bo & ao);
  });
}

TruthTable meet(const TruthTable& a, const TruthTable& b) {
  return combine(a, b, [](auto az, auto ao, auto bz, auto bo, auto& z, auto& o) {
    z = az | bz;
    o = ao & bo;
  });
}

TruthTable vee(const TruthTable& a, const TruthTable& b) {
  return combine(a, b, [](auto az, auto ao, auto bz, auto bo, auto& z, auto& o) {
    z = az & bz;
    o = ao | bo;
  });
}

TruthTable neg(const TruthTable& a) {
  return TruthTable(a.arity(), {a.one_plane().begin(), a.one_plane().end()},
                    {a.zero_plane().begin(), a.zero_plane().end()});
}

TruthTable nabla(const TruthTable& a) {
  std::vector<std::uint64_t> z(a.zero_plane().begin(), a.zero_plane().end()), o(z.size());
  for (std::size_t w = 0; w < z.size(); ++w) o[w] = ~z[w];
  o.back() &= a.last_word_mask();
  return TruthTable(a.arity(), std::move(z), std::move(o));
}

TruthTable delta(const TruthTable& a) {
  std::vector<std::uint64_t> o(a.one_plane().begin(), a.one_plane().end()), z(o.size());
  for (std::size_t w = 0; w < o.size(); ++w) z[w] = ~o[w];
  z.back() &= a.last_word_mask();
  return TruthTable(a.arity(), std::move(z), std::move(o));
}

std::optional<TruthTable> meet_partial(const TruthTable& a, const TruthTable& b) {
  if (first_clash(a, b)) return std::nullopt;
  return combine(a, b, [](auto az, auto ao, auto bz, auto bo, auto& z, auto& o) {
    z = az | bz;
    o = ao | bo;
  });
}

std::optional<std::uint64_t> first_clash(const TruthTable& a, const TruthTable& b) {
  require_same_arity(a, b);
  const auto az = a.zero_plane(), ao = a.one_plane(), bz = b.zero_plane(), bo = b.one_plane();
  for (std::size_t w = 0; w < az.size(); ++w) {
    const std::uint64_t c = (az[w] & bo[w]) | (ao[w] & bz[w]);
    if (c) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(c));
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_not_below(const TruthTable& a, const TruthTable& b) {
  require_same_arity(a, b);
  // below(x, y) fails iff y is boolean and x differs from y.
  const auto az = a.zero_plane(), ao = a.one_plane(), bz = b.zero_plane(), bo = b.one_plane();
  for (std::size_t w = 0; w < az.size(); ++w) {
    const std::uint64_t bad = (bz[w] & ~az[w]) | (bo[w] & ~ao[w]);
    if (bad) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(bad));
  }
  return std::nullopt;
}

bool below(const TruthTable& a, const TruthTable& b) { return !first_not_below(a, b).has_value(); }

TruthTable extend_arity(const TruthTable& t, int arity) {
  if (arity < t.arity()) throw ArityError("cannot shrink truth table arity");
  TruthTable r(arity, Trit::Half);
  const std::uint64_t block = pow3(arity - t.arity());
  for (std::uint64_t i = 0; i < r.size(); ++i) r.set(i, t.get(i / block));
  return r;
}

}  // namespace rmlogic
