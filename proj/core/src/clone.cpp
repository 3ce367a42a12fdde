#include "rmlogic/clone.hpp"

#include "rmlogic/errors.hpp"

namespace rmlogic {

namespace {

constexpr std::size_t cell(int x, int y) { return static_cast<std::size_t>(x * 3 + y); }

bool depends_on_y(const BinaryOp& op) {
  for (int x = 0; x < 3; ++x) {
    if (op[cell(x, 0)] != op[cell(x, 1)] || op[cell(x, 0)] != op[cell(x, 2)]) return true;
  }
  return false;
}

template <typename Fn>
BinaryOp tabulate2(Fn fn) {
  BinaryOp op{};
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) op[cell(x, y)] = fn(trit_from_index(x), trit_from_index(y));
  }
  return op;
}

std::array<Trit, 3> unary_code(int code) {
  std::array<Trit, 3> f{};
  for (int i = 2; i >= 0; --i) {
    f[static_cast<std::size_t>(i)] = trit_from_index(code % 3);
    code /= 3;
  }
  return f;
}

}  // namespace

BinaryOp op_from_unary(const std::array<Trit, 3>& f) {
  return tabulate2([&](Trit x, Trit) { return f[static_cast<std::size_t>(index_of(x))]; });
}

BinaryOp op_constant(Trit c) { return tabulate2([&](Trit, Trit) { return c; }); }

BinaryOp projection(int which) {
  return tabulate2([&](Trit x, Trit y) { return which == 1 ? x : y; });
}

BinaryOp named_op(std::string_view name) {
  if (name == "0") return op_constant(Trit::Zero);
  if (name == "h") return op_constant(Trit::Half);
  if (name == "1") return op_constant(Trit::One);
  if (name == "p1") return projection(1);
  if (name == "p2") return projection(2);
  if (name == "join") return tabulate2([](Trit x, Trit y) { return join(x, y); });
  if (name == "dpar") return tabulate2([](Trit x, Trit y) { return dpar(x, y); });
  if (name == "meet") return tabulate2([](Trit x, Trit y) { return meet(x, y); });
  if (name == "vee") return tabulate2([](Trit x, Trit y) { return vee(x, y); });
  if (name == "neg") return tabulate2([](Trit x, Trit) { return neg(x); });
  if (name == "nabla") return tabulate2([](Trit x, Trit) { return nabla(x); });
  if (name == "delta") return tabulate2([](Trit x, Trit) { return delta(x); });
  if (name == "flip") return tabulate2([](Trit x, Trit) { return flip(x); });
  if (name.size() == 9 || name.size() == 3) {
    std::vector<Trit> v;
    for (char c : name) {
      auto t = trit_from_char(c);
      if (!t) break;
      v.push_back(*t);
    }
    if (v.size() == 9) {
      BinaryOp op{};
      std::copy(v.begin(), v.end(), op.begin());
      return op;
    }
    if (v.size() == 3) return op_from_unary({v[0], v[1], v[2]});
  }
  throw InputError("unknown operation '" + std::string(name) + "'");
}

std::string op_row(const BinaryOp& op) {
  std::string s;
  for (Trit t : op) s += to_char(t);
  return s;
}

std::uint32_t op_code(const BinaryOp& op) {
  std::uint32_t c = 0;
  for (Trit t : op) c = c * 3 + static_cast<std::uint32_t>(index_of(t));
  return c;
}

Clone::Clone(const std::vector<std::string>& generators) : names_(generators), position_(19683, -1) {
  std::vector<std::pair<int, BinaryOp>> binary, unary;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const BinaryOp g = named_op(generators[k]);
    // constants and operations of x alone act as unary
    (depends_on_y(g) ? binary : unary).emplace_back(static_cast<int>(k), g);
  }
  auto add = [&](const BinaryOp& op, Origin o) {
    const auto c = op_code(op);
    if (position_[c] >= 0) return;
    position_[c] = static_cast<std::int32_t>(members_.size());
    members_.push_back(op);
    origin_.push_back(o);
  };
  add(projection(1), {-1, 1, 0});
  add(projection(2), {-1, 2, 0});
  std::size_t old_end = 0;
  while (old_end < members_.size()) {
    ++rounds_;
    const std::size_t new_end = members_.size();
    for (std::size_t i = old_end; i < new_end; ++i) {
      for (const auto& [k, u] : unary) {
        const BinaryOp f = members_[i];
        add(tabulate2([&](Trit x, Trit y) { return u[cell(index_of(f[cell(index_of(x), index_of(y))]), 0)]; }),
            {k, i, 0});
      }
    }
    for (const auto& [k, h] : binary) {
      for (std::size_t i = 0; i < new_end; ++i) {
        for (std::size_t j = (i < old_end ? old_end : 0); j < new_end; ++j) {
          const BinaryOp f = members_[i];
          const BinaryOp g = members_[j];
          add(tabulate2([&](Trit x, Trit y) {
                const auto c = cell(index_of(x), index_of(y));
                return h[cell(index_of(f[c]), index_of(g[c]))];
              }),
              {k, i, j});
        }
      }
    }
    old_end = new_end;
  }
}

bool Clone::contains(const BinaryOp& op) const { return position_[op_code(op)] >= 0; }

std::string Clone::render_member(std::size_t i) const {
  const Origin& o = origin_[i];
  if (o.generator < 0) return o.f == 1 ? "x" : "y";
  const std::string& name = names_[static_cast<std::size_t>(o.generator)];
  const BinaryOp g = named_op(name);
  if (depends_on_y(g)) return name + "(" + render_member(o.f) + ", " + render_member(o.g) + ")";
  if (g == op_constant(g[0])) return name;
  return name + "(" + render_member(o.f) + ")";
}

std::optional<std::string> Clone::term_for(const BinaryOp& op) const {
  const auto p = position_[op_code(op)];
  if (p < 0) return std::nullopt;
  return render_member(static_cast<std::size_t>(p));
}

std::vector<BinaryOp> Clone::unary_members() const {
  std::vector<BinaryOp> out;
  for (const auto& m : members_) {
    if (!depends_on_y(m)) out.push_back(m);
  }
  return out;
}

namespace {

template <typename Shape>
std::optional<std::pair<std::array<Trit, 3>, std::array<Trit, 3>>> search_shape(Shape shape) {
  for (int fc = 0; fc < 27; ++fc) {
    for (int gc = 0; gc < 27; ++gc) {
      const auto f = unary_code(fc);
      const auto g = unary_code(gc);
      bool ok = true;
      for (int x = 0; x < 3 && ok; ++x) {
        for (int y = 0; y < 3 && ok; ++y) {
          const Trit v = shape(f[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]);
          ok = v == meet(trit_from_index(x), trit_from_index(y));
        }
      }
      if (ok) return std::make_pair(f, g);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::array<Trit, 3>, std::array<Trit, 3>>> join_shape_for_min() {
  return search_shape([](Trit a, Trit b) { return join(a, b); });
}

std::optional<std::pair<std::array<Trit, 3>, std::array<Trit, 3>>> dpar_shape_for_min() {
  return search_shape([](Trit a, Trit b) { return dpar(a, b); });
}

}  // namespace rmlogic
