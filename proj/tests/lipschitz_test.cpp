#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "oracles/oracles.hpp"
#include "outer/error.hpp"
#include "outer/lipschitz.hpp"
#include "support.hpp"

using namespace outer;
using outer::testing::q;
using outer::testing::random_graphs;

namespace {

// Rotation- and inversion-free key of a cyclic path.
std::vector<Dir> loop_key(const std::vector<Dir>& p) {
  std::vector<Dir> best;
  const std::vector<Dir>& fwd = p;
  std::vector<Dir> inv;
  for (auto it = p.rbegin(); it != p.rend(); ++it) inv.push_back(reverse(*it));
  for (const std::vector<Dir>* seq : std::array<const std::vector<Dir>*, 2>{&fwd, &inv}) {
    for (std::size_t i = 0; i < seq->size(); ++i) {
      std::vector<Dir> r(seq->begin() + static_cast<std::ptrdiff_t>(i), seq->end());
      r.insert(r.end(), seq->begin(), seq->begin() + static_cast<std::ptrdiff_t>(i));
      if (best.empty() || r < best) best = r;
    }
  }
  return best;
}

void expect_wellformed_candidates(const MarkedMetricGraph& g, const std::vector<Candidate>& cands) {
  std::set<std::vector<Dir>> keys;
  for (const auto& c : cands) {
    const auto& p = c.path.dirs;
    ASSERT_FALSE(p.empty());
    EXPECT_EQ(tighten(p, true), p);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(g.head(p[i]), g.tail(p[(i + 1) % p.size()]));
    std::map<int, int> crossings;
    for (Dir d : p) ++crossings[edge_of(d)];
    for (auto [e, n] : crossings) EXPECT_LE(n, 2);
    bool twice = std::any_of(crossings.begin(), crossings.end(), [](auto kv) { return kv.second == 2; });
    EXPECT_EQ(twice, c.shape == Shape::barbell);
    keys.insert(loop_key(p));
  }
  EXPECT_EQ(keys.size(), cands.size());
}

MarkedMetricGraph r3(const char* a, const char* b, const char* c) { return outer::testing::rose3(a, b, c); }

}  // namespace

TEST(Candidates, Rose) {
  auto g = r3("1/3", "1/3", "1/3");
  auto cands = candidates(g);
  EXPECT_EQ(cands.size(), 9u);
  EXPECT_EQ(std::count_if(cands.begin(), cands.end(), [](const Candidate& c) { return c.shape == Shape::circle; }), 3);
  expect_wellformed_candidates(g, cands);
}

TEST(Candidates, ThetaAndBarbell) {
  auto theta = outer::testing::theta4();
  auto cands = candidates(theta);
  // Six embedded circles; two edge-disjoint circles always share both vertices.
  EXPECT_EQ(cands.size(), 6u);
  expect_wellformed_candidates(theta, cands);

  auto bar = outer::testing::barbell_plus();
  auto bc = candidates(bar);
  EXPECT_EQ(bc.size(), 9u);
  expect_wellformed_candidates(bar, bc);
  for (const auto& c : bc) {
    if (c.shape != Shape::barbell) continue;
    EXPECT_EQ(std::count_if(c.path.dirs.begin(), c.path.dirs.end(), [](Dir d) { return edge_of(d) == 1; }), 2);
  }
}

TEST(Candidates, RandomGraphs) {
  for (const auto& g : random_graphs(60, 40)) expect_wellformed_candidates(g, candidates(g));
}

TEST(StretchFactor, Examples) {
  auto g = r3("1/3", "1/3", "1/3");
  auto h = r3("1/2", "1/4", "1/4");
  EXPECT_EQ(stretch_factor(g, g).lambda, 1);
  auto s = stretch_factor(g, h);
  EXPECT_EQ(s.lambda, q("3/2"));
  EXPECT_EQ(s.witness.path.dirs, std::vector<Dir>{0});
  EXPECT_EQ(distance(h, g), q("4/3"));
  EXPECT_THROW(stretch_factor(g, rose({q("1/2"), q("1/2")})), Error);
}

TEST(StretchFactor, MatchesExhaustiveLoops) {
  auto gs = random_graphs(61, 30);
  auto hs = random_graphs(62, 30);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_EQ(stretch_factor(gs[i], hs[i]).lambda, oracle::max_loop_stretch(gs[i], hs[i]));
  }
}

TEST(StretchFactor, TriangleInequalityAndWitnessLength) {
  auto g1 = random_graphs(63, 20);
  auto g2 = random_graphs(64, 20);
  auto g3 = random_graphs(65, 20);
  for (std::size_t i = 0; i < g1.size(); ++i) {
    EXPECT_LE(distance(g1[i], g3[i]), distance(g1[i], g2[i]) * distance(g2[i], g3[i]));
    auto s = stretch_factor(g1[i], g2[i]);
    EXPECT_LT(path_length(g1[i], s.witness.path.dirs), 2);
    EXPECT_GE(s.lambda, 1);
  }
}

TEST(OptimalMap, RosePair) {
  auto g = r3("1/3", "1/3", "1/3");
  auto h = r3("1/2", "1/4", "1/4");
  auto f = optimal_map(g, h);
  EXPECT_EQ(f.sigma(), q("3/2"));
  EXPECT_EQ(f.slope(0), q("3/2"));
  EXPECT_EQ(f.slope(1), q("3/4"));
  EXPECT_EQ(f.slope(2), q("3/4"));
  EXPECT_EQ(tension_graph(f), (std::vector<bool>{true, false, false}));

  auto id = optimal_map(g, g);
  EXPECT_EQ(id.sigma(), 1);
  EXPECT_EQ(tension_graph(id), (std::vector<bool>{true, true, true}));
  auto tt = gates(id, tension_graph(id));
  EXPECT_EQ(tt.num_gates(0), 6);
}

TEST(OptimalMap, SharedInitialSegmentGivesOneGate) {
  auto g = r3("1/3", "1/3", "1/3");
  auto h = twist(g, Automorphism(3, {FreeGroup(3).parse("ba"), FreeGroup(3).parse("b"), FreeGroup(3).parse("c")}));
  GraphMap f = initial_map(g, h);
  // Petal 0 of h reads ba, so a = (petal 1)^-1 (petal 0) and b^-1 both start along petal 1 backwards.
  auto tt = gates(f, std::vector<bool>(3, true));
  EXPECT_EQ(tt.gate[0], tt.gate[3]);
  EXPECT_EQ(tt.num_gates(0), 5);
}

TEST(OptimalMap, CertifiesStretchFactor) {
  auto gs = random_graphs(66, 30);
  auto hs = random_graphs(67, 30);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto s = stretch_factor(gs[i], hs[i]);
    auto f = optimal_map(gs[i], hs[i]);
    ASSERT_EQ(f.sigma(), s.lambda);
    auto tension = tension_graph(f);
    for (Dir d : s.witness.path.dirs) EXPECT_TRUE(tension[static_cast<std::size_t>(edge_of(d))]);
    auto tt = gates(f, tension);
    EXPECT_TRUE(is_legal(tt, s.witness.path));
    for (int v = 0; v < gs[i].num_vertices; ++v) {
      int k = tt.num_gates(v);
      EXPECT_TRUE(k == 0 || k >= 2) << "vertex " << v << " has one gate";
    }
    // Gates are exactly the classes of equal image germs.
    for (Dir a = 0; a < 2 * gs[i].num_edges(); ++a) {
      for (Dir b = 0; b < 2 * gs[i].num_edges(); ++b) {
        if (tt.gate[static_cast<std::size_t>(a)] < 0 || tt.gate[static_cast<std::size_t>(b)] < 0) continue;
        if (gs[i].tail(a) != gs[i].tail(b)) continue;
        EXPECT_EQ(tt.gate[static_cast<std::size_t>(a)] == tt.gate[static_cast<std::size_t>(b)], f.germ(a) == f.germ(b));
      }
    }
  }
}

TEST(OptimalMap, SlopesMatchImageLengthsOfEdges) {
  auto gs = random_graphs(68, 10);
  auto hs = random_graphs(69, 10);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto f = optimal_map(gs[i], hs[i]);
    for (int e = 0; e < gs[i].num_edges(); ++e) {
      Rational len = 0;
      for (const auto& p : f.image(2 * e)) len += p.to - p.from;
      EXPECT_EQ(len, f.image_length(e));
      EXPECT_EQ(f.slope(e) * gs[i].lengths[static_cast<std::size_t>(e)], len);
    }
  }
}

TEST(OptimizeInSimplex, SameSimplex) {
  auto g = r3("1/3", "1/3", "1/3");
  auto h = r3("1/2", "1/4", "1/4");
  auto opt = optimize_in_simplex(g, h);
  EXPECT_EQ(opt.lambda, 1);
  EXPECT_EQ(opt.lengths, (std::vector<Rational>{q("1/2"), q("1/4"), q("1/4")}));
  EXPECT_FALSE(opt.boundary);
}

TEST(OptimizeInSimplex, BeatsRandomSamples) {
  Rng rng(70);
  auto hs = random_graphs(71, 5, {3, 12, 6, 2});
  auto g = r3("1/3", "1/3", "1/3");
  for (const auto& h : hs) {
    auto opt = optimize_in_simplex(g, h);
    auto at = with_lengths(g, opt.lengths);
    EXPECT_EQ(volume(at), 1);
    EXPECT_EQ(stretch_factor(at, h).lambda, opt.lambda);
    for (int k = 0; k < 100; ++k) {
      auto x = outer::testing::random_point_in_simplex(rng, g);
      EXPECT_LE(opt.lambda, stretch_factor(x, h).lambda);
    }
  }
}
