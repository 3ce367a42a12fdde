#include "rmlogic/enumerate.hpp"

#include "rmlogic/errors.hpp"

namespace rmlogic {

FormulaAlphabet FormulaAlphabet::core(int vars) {
  FormulaAlphabet a;
  a.vars = vars;
  return a;
}

FormulaAlphabet FormulaAlphabet::sugared(int vars) {
  FormulaAlphabet a;
  a.vars = vars;
  a.with_one = true;
  a.unary = {Op::Neg, Op::Nabla, Op::Delta};
  a.binary = {Op::Join, Op::Dpar, Op::Meet, Op::Vee};
  return a;
}

namespace {

std::vector<Formula> leaves(const FormulaAlphabet& a) {
  std::vector<Formula> out{Formula::zero(), Formula::half()};
  if (a.with_one) out.push_back(Formula::one());
  for (int i = 1; i <= a.vars; ++i) out.push_back(Formula::var(i));
  return out;
}

std::vector<PostFormula> post_leaves(int vars) {
  std::vector<PostFormula> out{PostFormula::zero(), PostFormula::half(), PostFormula::one()};
  for (int i = 1; i <= vars; ++i) out.push_back(PostFormula::var(i));
  return out;
}

/// Shared by the RM and Post enumerators: by_size[s] holds the formulas of
/// exactly s nodes.
template <typename F, typename Unary, typename Binary>
std::vector<F> enumerate_by_size(std::vector<F> leafs, std::size_t max_size, std::size_t n_unary,
                                 std::size_t n_binary, Unary make_unary, Binary make_binary) {
  std::vector<std::vector<F>> by_size(max_size + 1);
  if (max_size >= 1) by_size[1] = std::move(leafs);
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (std::size_t u = 0; u < n_unary; ++u) {
      for (const auto& a : by_size[s - 1]) by_size[s].push_back(make_unary(u, a));
    }
    for (std::size_t b = 0; b < n_binary; ++b) {
      for (std::size_t l = 1; l + 1 < s; ++l) {
        const std::size_t r = s - 1 - l;
        for (const auto& x : by_size[l]) {
          for (const auto& y : by_size[r]) by_size[s].push_back(make_binary(b, x, y));
        }
      }
    }
  }
  std::vector<F> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

template <typename F, typename Leaf, typename Unary, typename Binary>
F random_tree(std::mt19937_64& rng, std::size_t size, std::size_t n_unary, std::size_t n_binary, Leaf leaf,
              Unary make_unary, Binary make_binary) {
  const bool can_unary = n_unary > 0 && size >= 2;
  const bool can_binary = n_binary > 0 && size >= 3;
  if (!can_unary && !can_binary) return leaf();
  bool use_unary = can_unary;
  if (can_unary && can_binary) use_unary = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  if (use_unary) {
    const auto u = std::uniform_int_distribution<std::size_t>(0, n_unary - 1)(rng);
    return make_unary(u, random_tree<F>(rng, size - 1, n_unary, n_binary, leaf, make_unary, make_binary));
  }
  const auto b = std::uniform_int_distribution<std::size_t>(0, n_binary - 1)(rng);
  const auto l = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
  F x = random_tree<F>(rng, l, n_unary, n_binary, leaf, make_unary, make_binary);
  F y = random_tree<F>(rng, size - 1 - l, n_unary, n_binary, leaf, make_unary, make_binary);
  return make_binary(b, x, y);
}

}  // namespace

std::vector<Formula> enumerate_formulas(const FormulaAlphabet& a, std::size_t max_size) {
  return enumerate_by_size<Formula>(
      leaves(a), max_size, a.unary.size(), a.binary.size(),
      [&](std::size_t u, const Formula& x) { return Formula::make(a.unary[u], {x}); },
      [&](std::size_t b, const Formula& x, const Formula& y) { return Formula::make(a.binary[b], {x, y}); });
}

std::vector<PostFormula> enumerate_post_formulas(int vars, std::size_t max_size) {
  return enumerate_by_size<PostFormula>(
      post_leaves(vars), max_size, 2, 2,
      [](std::size_t u, const PostFormula& x) { return u == 0 ? PostFormula::neg(x) : PostFormula::nabla(x); },
      [](std::size_t b, const PostFormula& x, const PostFormula& y) {
        return b == 0 ? PostFormula::vee(x, y) : PostFormula::meet(x, y);
      });
}

Formula random_formula(std::mt19937_64& rng, const FormulaAlphabet& a, std::size_t max_size) {
  if (max_size == 0) throw PreconditionError("random_formula needs max_size >= 1");
  const auto ls = leaves(a);
  const auto size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  return random_tree<Formula>(
      rng, size, a.unary.size(), a.binary.size(),
      [&] { return ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]; },
      [&](std::size_t u, const Formula& x) { return Formula::make(a.unary[u], {x}); },
      [&](std::size_t b, const Formula& x, const Formula& y) { return Formula::make(a.binary[b], {x, y}); });
}

PostFormula random_post_formula(std::mt19937_64& rng, int vars, std::size_t max_size) {
  if (max_size == 0) throw PreconditionError("random_post_formula needs max_size >= 1");
  const auto ls = post_leaves(vars);
  const auto size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  return random_tree<PostFormula>(
      rng, size, 2, 2, [&] { return ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)]; },
      [](std::size_t u, const PostFormula& x) { return u == 0 ? PostFormula::neg(x) : PostFormula::nabla(x); },
      [](std::size_t b, const PostFormula& x, const PostFormula& y) {
        return b == 0 ? PostFormula::vee(x, y) : PostFormula::meet(x, y);
      });
}

}  // namespace rmlogic
