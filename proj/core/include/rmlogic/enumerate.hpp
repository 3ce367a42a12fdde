#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rmlogic/formula.hpp"

namespace rmlogic {

/// Leaves and connectives used to generate formulas.
struct FormulaAlphabet {
  int vars = 1;
  bool with_one = false;
  std::vector<Op> unary;
  std::vector<Op> binary{Op::Join, Op::Dpar, Op::Meet};

  /// 0, h, X1..Xm with #, d, &.
  static FormulaAlphabet core(int vars);
  /// Core plus 1, !, N, T and |.
  static FormulaAlphabet sugared(int vars);
};

/// All formulas with at most `max_size` nodes, ordered by size and then by
/// construction order. Leaves are 0, h, [1], X1..Xm.
std::vector<Formula> enumerate_formulas(const FormulaAlphabet& alphabet, std::size_t max_size);

/// All Post formulas over 0, h, 1, X1..Xm, !, N, |, & with at most
/// `max_size` nodes.
std::vector<PostFormula> enumerate_post_formulas(int vars, std::size_t max_size);

/// Random tree with size uniform in [1, max_size] (shape then leaves).
Formula random_formula(std::mt19937_64& rng, const FormulaAlphabet& alphabet, std::size_t max_size);
PostFormula random_post_formula(std::mt19937_64& rng, int vars, std::size_t max_size);

}  // namespace rmlogic
