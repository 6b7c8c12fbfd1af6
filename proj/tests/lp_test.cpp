#include <gtest/gtest.h>

#include <optional>

#include "outer/lp.hpp"
#include "outer/random.hpp"
#include "support.hpp"

using namespace outer;
using outer::testing::q;

namespace {

LinearProgram two_variable(std::vector<std::array<int, 3>> rows, int c0, int c1) {
  LinearProgram lp;
  lp.c = {Rational(c0), Rational(c1)};
  for (auto [a, b, r] : rows) lp.add_row({Rational(a), Rational(b)}, Rational(r));
  return lp;
}

// Best feasible vertex among all pairwise intersections of constraint lines and axes.
std::optional<Rational> vertex_enumeration(const LinearProgram& lp) {
  std::vector<std::array<Rational, 3>> lines;
  for (std::size_t i = 0; i < lp.a.size(); ++i) lines.push_back({lp.a[i][0], lp.a[i][1], lp.b[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Rational det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
      if (det == 0) continue;
      Rational x = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det;
      Rational y = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det;
      if (x < 0 || y < 0) continue;
      bool ok = true;
      for (std::size_t k = 0; k < lp.a.size(); ++k) ok = ok && lp.a[k][0] * x + lp.a[k][1] * y <= lp.b[k];
      if (!ok) continue;
      Rational v = lp.c[0] * x + lp.c[1] * y;
      if (!best || v > *best) best = v;
    }
  }
  return best;
}

}  // namespace

TEST(Simplex, Examples) {
  auto r = solve(two_variable({{1, 2, 4}, {3, 1, 6}}, 1, 1));
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, q("14/5"));
  EXPECT_EQ(r.x[0], q("8/5"));
  EXPECT_EQ(r.x[1], q("6/5"));

  EXPECT_EQ(solve(two_variable({{1, 0, -1}}, 1, 0)).status, LpStatus::infeasible);
  EXPECT_EQ(solve(two_variable({{-1, 0, 0}}, 1, 0)).status, LpStatus::unbounded);

  auto lower = solve(two_variable({{-1, 0, -1}, {0, -1, -2}}, -1, -1));
  ASSERT_EQ(lower.status, LpStatus::optimal);
  EXPECT_EQ(lower.value, -3);
}

TEST(Simplex, BealeCyclingExampleTerminates) {
  LinearProgram lp;
  lp.c = {q("3/4"), Rational(-150), q("1/50"), Rational(-6)};
  lp.add_row({q("1/4"), Rational(-60), q("-1/25"), Rational(9)}, 0);
  lp.add_row({q("1/2"), Rational(-90), q("-1/50"), Rational(3)}, 0);
  lp.add_row({Rational(0), Rational(0), Rational(1), Rational(0)}, 1);
  auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, q("1/20"));
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  Rng rng(7);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::array<int, 3>> rows;
    int m = uniform_int(rng, 1, 5);
    for (int i = 0; i < m; ++i) rows.push_back({uniform_int(rng, -5, 5), uniform_int(rng, -5, 5), uniform_int(rng, -6, 10)});
    // Keep the region bounded.
    rows.push_back({1, 1, uniform_int(rng, 1, 12)});
    auto lp = two_variable(rows, uniform_int(rng, -4, 4), uniform_int(rng, -4, 4));
    auto r = solve(lp);
    auto expected = vertex_enumeration(lp);
    if (!expected) {
      EXPECT_EQ(r.status, LpStatus::infeasible);
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, *expected);
    for (std::size_t k = 0; k < lp.a.size(); ++k) EXPECT_LE(lp.a[k][0] * r.x[0] + lp.a[k][1] * r.x[1], lp.b[k]);
    ++solved;
  }
  EXPECT_GT(solved, 100);
}
