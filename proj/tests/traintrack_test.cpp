#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles/oracles.hpp"
#include "outer/error.hpp"
#include "outer/lipschitz.hpp"
#include "outer/traintrack.hpp"
#include "support.hpp"

using namespace outer;
using outer::testing::q;
using outer::testing::random_structure;

namespace {

TrainTrackStructure singletons(const MarkedMetricGraph& g) {
  std::vector<int> gate(static_cast<std::size_t>(2 * g.num_edges()));
  auto stars = g.stars();
  for (const auto& star : stars) {
    for (std::size_t i = 0; i < star.size(); ++i) gate[static_cast<std::size_t>(star[i])] = static_cast<int>(i);
  }
  return TrainTrackStructure::of(g, gate);
}

void expect_spanning(const TrainTrackStructure& tt, const EdgePath& loop, bool both) {
  EXPECT_TRUE(is_legal(tt, loop));
  std::set<int> seen;
  for (Dir d : loop.dirs) seen.insert(both ? d : edge_of(d));
  for (int e = 0; e < tt.num_edges(); ++e) {
    if (!tt.supported(e)) continue;
    if (both) {
      EXPECT_TRUE(seen.count(2 * e) && seen.count(2 * e + 1));
    } else {
      EXPECT_TRUE(seen.count(e));
    }
  }
}

}  // namespace

TEST(Legality, Examples) {
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  auto tt = singletons(g);
  EXPECT_EQ(illegal_turn_count(tt, {{0, 2, 4}, true}), 0);
  auto gate = tt.gate;
  gate[0] = gate[2];  // a and b leave in one gate
  auto one = TrainTrackStructure::of(g, gate);
  // a^-1 b takes the turn {a, b} once.
  EXPECT_EQ(illegal_turn_count(one, {{1, 2}, true}), 1);
  EXPECT_TRUE(is_legal(one, {{0, 2}, true}));
  EXPECT_FALSE(is_legal(one, {{1, 2}, true}));
  EXPECT_THROW(illegal_turn_count(one, {{0, 7}, true}), Error);
}

TEST(Legality, CountZeroIffLegal) {
  Rng rng(80);
  for (const auto& g : outer::testing::random_graphs(81, 20)) {
    auto tt = random_structure(rng, g, 1);
    for (int k = 0; k < 10; ++k) {
      auto loop = loop_representative(g, CyclicWord::of(random_word(rng, 3, uniform_int(rng, 1, 6))));
      EXPECT_EQ(is_legal(tt, loop), illegal_turn_count(tt, loop) == 0);
    }
  }
}

TEST(DirectionDigraph, Examples) {
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  auto dg = direction_digraph(singletons(g));
  for (Dir d = 0; d < 6; ++d) {
    std::vector<Dir> expected;
    for (Dir x = 0; x < 6; ++x) {
      if (x != reverse(d)) expected.push_back(x);
    }
    EXPECT_EQ(dg.arcs[static_cast<std::size_t>(d)], expected);
  }
  auto gate = singletons(g).gate;
  gate[0] = gate[2];
  auto cut = direction_digraph(TrainTrackStructure::of(g, gate));
  auto has = [&](Dir a, Dir b) {
    const auto& arcs = cut.arcs[static_cast<std::size_t>(a)];
    return std::find(arcs.begin(), arcs.end(), b) != arcs.end();
  };
  EXPECT_FALSE(has(1, 2));
  EXPECT_FALSE(has(3, 0));
  EXPECT_TRUE(has(0, 2));
  EXPECT_EQ(cut.arcs[1].size() + cut.arcs[3].size(), 8u);
}

TEST(DirectionDigraph, MatchesDefinition) {
  Rng rng(82);
  for (const auto& g : outer::testing::random_graphs(83, 20)) {
    auto tt = random_structure(rng, g, 1);
    auto dg = direction_digraph(tt);
    for (Dir d = 0; d < 2 * g.num_edges(); ++d) {
      for (Dir x = 0; x < 2 * g.num_edges(); ++x) {
        bool expected = g.head(d) == g.tail(x) && tt.gate[static_cast<std::size_t>(reverse(d))] != tt.gate[static_cast<std::size_t>(x)];
        const auto& arcs = dg.arcs[static_cast<std::size_t>(d)];
        EXPECT_EQ(std::find(arcs.begin(), arcs.end(), x) != arcs.end(), expected);
      }
    }
  }
}

TEST(Recurrence, Singletons) {
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  auto r = classify_recurrence(singletons(g));
  EXPECT_EQ(r.kind, Recurrence::birecurrent);
  ASSERT_TRUE(r.certificate);
  expect_spanning(singletons(g), *r.certificate, true);
}

TEST(Recurrence, CoherentOrientation) {
  // Outgoing and incoming directions form the two gates of the rose.
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  auto tt = TrainTrackStructure::of(g, {0, 1, 0, 1, 0, 1});
  auto r = classify_recurrence(tt);
  EXPECT_EQ(r.kind, Recurrence::recurrent);
  ASSERT_TRUE(r.certificate);
  expect_spanning(tt, *r.certificate, false);
  EXPECT_TRUE(oracle::has_spanning_legal_loop(tt, false));
  EXPECT_FALSE(oracle::has_spanning_legal_loop(tt, true));
}

TEST(Recurrence, ConfinedLegalLoops) {
  // A single gate at vertex 1 of the barbell: legal loops stay in the two loops at vertex 0.
  auto g = outer::testing::barbell_plus();
  auto tt = singletons(g);
  tt.gate[3] = tt.gate[4] = tt.gate[5] = 0;
  auto r = classify_recurrence(tt);
  EXPECT_NE(r.kind, Recurrence::recurrent);
  EXPECT_NE(r.kind, Recurrence::birecurrent);
  EXPECT_FALSE(r.certificate);
  EXPECT_FALSE(find_spanning_legal_loop(tt));
  EXPECT_FALSE(oracle::has_spanning_legal_loop(tt, false));
  EXPECT_EQ(r.subgraph, std::vector<int>{1});
}

TEST(Recurrence, AgreesWithLegalLoopSearch) {
  Rng rng(84);
  int recurrent = 0;
  int birecurrent = 0;
  for (const auto& g0 : outer::testing::random_graphs(85, 60)) {
    auto g = g0;
    if (uniform_int(rng, 0, 1)) g = outer::testing::subdivide(g, uniform_int(rng, 0, g.num_edges() - 1), g.lengths[0] / 2);
    auto tt = random_structure(rng, g, uniform_int(rng, 1, 2));
    auto r = classify_recurrence(tt);
    bool rec = r.kind == Recurrence::recurrent || r.kind == Recurrence::birecurrent;
    EXPECT_EQ(rec, oracle::has_spanning_legal_loop(tt, false));
    EXPECT_EQ(r.kind == Recurrence::birecurrent, oracle::has_spanning_legal_loop(tt, true));
    EXPECT_EQ(rec, find_spanning_legal_loop(tt).has_value());
    EXPECT_NE(r.kind, Recurrence::reducible);
    if (r.certificate) expect_spanning(tt, *r.certificate, r.kind == Recurrence::birecurrent);
    recurrent += rec;
    birecurrent += r.kind == Recurrence::birecurrent;
  }
  EXPECT_GT(recurrent, 0);
  EXPECT_LT(recurrent, 60);
  EXPECT_GT(birecurrent, 0);
}

TEST(Recurrence, SimplexOptimumIsRecurrent) {
  auto gs = outer::testing::random_graphs(86, 6);
  auto hs = outer::testing::random_graphs(87, 6);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto opt = optimize_in_simplex(gs[i], hs[i]);
    if (opt.boundary) continue;
    auto at = with_lengths(gs[i], opt.lengths);
    auto f = optimal_map(at, hs[i]);
    auto tension = tension_graph(f);
    EXPECT_TRUE(std::all_of(tension.begin(), tension.end(), [](bool b) { return b; }));
    auto r = classify_recurrence(gates(f, tension));
    EXPECT_TRUE(r.kind == Recurrence::recurrent || r.kind == Recurrence::birecurrent) << to_string(r.kind);
  }
}
