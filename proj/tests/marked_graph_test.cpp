#include <gtest/gtest.h>

#include <set>

#include "outer/cover.hpp"
#include "outer/error.hpp"
#include "outer/marked_graph.hpp"
#include "support.hpp"

using namespace outer;
using outer::testing::q;

namespace {

const FreeGroup F3(3);

CyclicWord c3(const char* s) { return CyclicWord::of(F3.parse(s)); }

using outer::testing::random_graphs;

// Translation length read off the universal cover: l(g) = d(x, g^2 x) - d(x, g x).
Rational tree_translation_length(const MarkedMetricGraph& g, const Word& w) {
  Cover cover(g);
  auto x = cover.root();
  return cover.distance(x, cover.act(w * w, x)) - cover.distance(x, cover.act(w, x));
}

}  // namespace

TEST(Validate, Examples) {
  auto r = validate(outer::testing::rose3("1/3", "1/3", "1/3"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.volume, 1);
  EXPECT_EQ(r.rank, 3);

  auto zero = outer::testing::rose3("1/3", "0", "1/3");
  EXPECT_TRUE(validate(zero).has("nonpositive length"));

  auto broken = outer::testing::rose3("1/3", "1/3", "1/3");
  broken.labels[1] = F3.parse("bc");
  EXPECT_TRUE(validate(broken).has("marking mismatch"));

  auto low = outer::testing::subdivide(outer::testing::rose3("1/3", "1/3", "1/3"), 0, q("1/6"));
  EXPECT_TRUE(validate(low).ok());
  low.subdivided = false;
  EXPECT_TRUE(validate(low).has("low degree"));
}

TEST(Validate, RandomGraphsAreValid) {
  for (const auto& g : random_graphs(41, 100)) {
    auto r = validate(g);
    EXPECT_TRUE(r.ok()) << (r.problems.empty() ? "" : r.problems[0].message);
    EXPECT_EQ(r.volume, 1);
    EXPECT_LE(g.num_edges(), 6);
  }
}

TEST(LoopRepresentative, Examples) {
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  EXPECT_EQ(loop_representative(g, c3("a")).dirs, std::vector<Dir>{0});
  EXPECT_EQ(loop_representative(g, c3("abA")).dirs, std::vector<Dir>{2});
  EXPECT_THROW(loop_representative(g, CyclicWord()), Error);
}

TEST(LoopRepresentative, RoundTripsThroughMarking) {
  Rng rng(42);
  for (const auto& g : random_graphs(43, 40)) {
    for (int k = 0; k < 5; ++k) {
      Word w = random_word(rng, 3, uniform_int(rng, 1, 8));
      if (CyclicWord::of(w).trivial()) continue;
      auto rep = loop_representative(g, CyclicWord::of(w));
      EXPECT_EQ(tighten(rep.dirs, true), rep.dirs);
      // Read the loop from the basepoint by conjugating with a tree path.
      EXPECT_EQ(CyclicWord::of(path_word(g, rep.dirs)), CyclicWord::of(w));
    }
  }
}

TEST(TranslationLength, Examples) {
  auto g = outer::testing::rose3("1/3", "1/3", "1/3");
  EXPECT_EQ(translation_length(g, c3("abc")), 1);
  EXPECT_EQ(translation_length(g, c3("abA")), q("1/3"));
  auto h = outer::testing::rose3("1/2", "1/4", "1/4");
  EXPECT_EQ(translation_length(h, c3("aab")), q("5/4"));
  EXPECT_EQ(tree_translation_length(h, F3.parse("aab")), q("5/4"));
  EXPECT_EQ(translation_length(h, CyclicWord()), 0);
}

TEST(TranslationLength, AgreesWithTreeDisplacement) {
  Rng rng(44);
  for (const auto& g : random_graphs(45, 30)) {
    for (int k = 0; k < 5; ++k) {
      Word w = random_word(rng, 3, uniform_int(rng, 1, 7));
      Word c = random_word(rng, 3, uniform_int(rng, 0, 4));
      EXPECT_EQ(translation_length(g, w), tree_translation_length(g, w));
      EXPECT_EQ(translation_length(g, w), translation_length(g, c * w * c.inverse()));
    }
  }
}

TEST(Normalize, ScalesTranslationLengths) {
  auto g = outer::testing::rose3("1", "1", "1");
  EXPECT_EQ(volume(g), 3);
  auto n = normalize(g);
  EXPECT_EQ(n.lengths[0], q("1/3"));
  EXPECT_EQ(normalize(n).lengths, n.lengths);
  Rng rng(46);
  for (auto g2 : random_graphs(47, 20)) {
    g2 = scale(g2, q("7/3"));
    Word w = random_word(rng, 3, 6);
    EXPECT_EQ(translation_length(normalize(g2), w), translation_length(g2, w) / volume(g2));
  }
}

TEST(SubgraphFactors, Rose) {
  auto factors = subgraph_factors(outer::testing::rose3("1/3", "1/3", "1/3"));
  EXPECT_EQ(factors.size(), 6u);
  std::set<std::string> expected;
  for (auto gens : std::vector<std::vector<const char*>>{{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}}) {
    std::vector<Word> words;
    for (auto s : gens) words.push_back(F3.parse(s));
    expected.insert(FactorHandle::from_generators(3, words).code());
  }
  std::set<std::string> got;
  for (const auto& f : factors) got.insert(f.code());
  EXPECT_EQ(got, expected);
}

TEST(SubgraphFactors, RankOneCoreSubgraph) {
  auto g = outer::testing::barbell_plus();
  auto factors = subgraph_factors(g);
  // The loop at vertex 1 (edge 2) is a rank-1 core subgraph.
  auto target = FactorHandle::from_generators(3, {g.labels[2]});
  bool found = false;
  for (const auto& f : factors) {
    EXPECT_GE(f.rank(), 1);
    EXPECT_LE(f.rank(), 2);
    if (f.code() == target.code()) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(SubgraphFactors, DistinctCodesOnRandomGraphs) {
  for (const auto& g : random_graphs(48, 30)) {
    auto factors = subgraph_factors(g);
    std::set<std::string> codes;
    for (const auto& f : factors) {
      codes.insert(f.code());
      EXPECT_GE(f.rank(), 1);
      EXPECT_LT(f.rank(), 3);
    }
    EXPECT_EQ(codes.size(), factors.size());
    EXPECT_GE(factors.size(), 3u);
  }
}

TEST(SubgroupCoreInGraph, Examples) {
  auto g = outer::testing::rose3("1/2", "1/4", "1/4");
  auto a = subgroup_core_in_graph(g, core_graph(F3, {F3.parse("a")}, false));
  EXPECT_EQ(a.volume, q("1/2"));
  EXPECT_EQ(a.core.num_edges(), 1);
  auto ab = subgroup_core_in_graph(g, core_graph(F3, {F3.parse("a"), F3.parse("b")}, false));
  EXPECT_EQ(ab.volume, q("3/4"));
}

TEST(SubgroupCoreInGraph, CyclicVolumeIsTranslationLength) {
  Rng rng(49);
  for (const auto& g : random_graphs(50, 30)) {
    Word w = F3.parse("ab");
    EXPECT_EQ(subgroup_core_in_graph(g, core_graph(F3, {w}, false)).volume, translation_length(g, w));
    Word r = cyclically_reduce(random_word(rng, 3, 6));
    if (r.empty()) continue;
    EXPECT_EQ(subgroup_core_in_graph(g, core_graph(F3, {r}, false)).volume, translation_length(g, r));
  }
}

TEST(Rebase, PreservesTranslationLengths) {
  Rng rng(51);
  for (const auto& g : random_graphs(52, 20)) {
    for (int v = 0; v < g.num_vertices; ++v) {
      auto h = rebase(g, v);
      EXPECT_TRUE(validate(h).ok());
      Word w = random_word(rng, 3, 6);
      EXPECT_EQ(translation_length(h, w), translation_length(g, w));
    }
  }
}

TEST(Smooth, UndoesSubdivision) {
  Rng rng(53);
  for (const auto& g : random_graphs(54, 20)) {
    int e = uniform_int(rng, 0, g.num_edges() - 1);
    auto h = outer::testing::subdivide(g, e, g.lengths[static_cast<std::size_t>(e)] / 3);
    h = outer::testing::subdivide(h, h.num_edges() - 1, h.lengths.back() / 2);
    ASSERT_TRUE(validate(h).ok());
    std::vector<EdgePlacement> placement;
    auto s = smooth(h, &placement);
    s.subdivided = false;
    EXPECT_TRUE(validate(s).ok());
    EXPECT_TRUE(find_marked_isometry(s, g).has_value());
    // Each old edge sits inside its new edge.
    for (int f = 0; f < h.num_edges(); ++f) {
      const auto& p = placement[static_cast<std::size_t>(f)];
      EXPECT_GE(p.offset, 0);
      EXPECT_LE(p.offset + h.lengths[static_cast<std::size_t>(f)], s.length(p.dir));
    }
    Word w = random_word(rng, 3, 6);
    EXPECT_EQ(translation_length(s, w), translation_length(h, w));
  }
}

TEST(MarkedIsometry, DetectsMarkingChanges) {
  Rng rng(55);
  for (const auto& g : random_graphs(56, 20)) {
    Word c = random_word(rng, 3, 3);
    std::vector<Word> inner;
    for (int i = 1; i <= 3; ++i) inner.push_back(c * Word::letter(i) * c.inverse());
    EXPECT_TRUE(find_marked_isometry(g, twist(g, Automorphism(3, inner))).has_value());
    EXPECT_TRUE(find_marked_isometry(g, rebase(g, g.num_vertices - 1)).has_value());
    Automorphism swap(3, {F3.parse("a"), F3.parse("ab"), F3.parse("c")});
    EXPECT_FALSE(find_marked_isometry(g, twist(g, swap)).has_value());
  }
}

TEST(Cover, MetricAxioms) {
  Rng rng(57);
  for (const auto& g : random_graphs(58, 20)) {
    Cover cover(g);
    std::vector<TreePoint> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(cover.act(random_word(rng, 3, 4), cover.root()));
    pts.push_back(cover.along(pts[0], pts[1], cover.distance(pts[0], pts[1]) / 3));
    Word h = random_word(rng, 3, 3);
    for (const auto& p : pts) {
      for (const auto& r : pts) {
        EXPECT_EQ(cover.distance(p, r), cover.distance(r, p));
        EXPECT_EQ(cover.distance(cover.act(h, p), cover.act(h, r)), cover.distance(p, r));
        for (const auto& s : pts) EXPECT_LE(cover.distance(p, s), cover.distance(p, r) + cover.distance(r, s));
        Rational len = 0;
        for (const auto& piece : cover.geodesic(p, r)) len += piece.to - piece.from;
        EXPECT_EQ(len, cover.distance(p, r));
        Rational d = cover.distance(p, r);
        auto mid = cover.along(p, r, d / 2);
        EXPECT_EQ(cover.distance(p, mid), d / 2);
        EXPECT_EQ(cover.distance(mid, r), d / 2);
      }
    }
  }
}
