#pragma once

#include <vector>

#include "outer/rational.hpp"

namespace outer {

/// maximize c.x subject to A x <= b, x >= 0. Entries of b may be negative.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;

  int num_variables() const { return static_cast<int>(c.size()); }
  /// Appends the row coeffs.x <= rhs.
  void add_row(std::vector<Rational> coeffs, Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex method with Bland's rule.
LpResult solve(const LinearProgram& lp);

}  // namespace outer
