#include <gtest/gtest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "outer/error.hpp"
#include "outer/whitehead.hpp"

using namespace outer;

namespace {

const FreeGroup F3(3);

CyclicWord c3(const char* s) { return CyclicWord::of(F3.parse(s)); }

int edge(const WhiteheadGraph& g, Letter x, Letter y) {
  return g.multiplicity[static_cast<std::size_t>(letter_key(x))][static_cast<std::size_t>(letter_key(y))];
}

// Every conjugacy class of length 1..max_length, one cyclic normal form each.
std::vector<CyclicWord> all_cyclic_words(int max_length) {
  std::set<CyclicWord> out;
  for (const auto& w : oracle::all_reduced_words(3, max_length)) {
    auto c = CyclicWord::of(w);
    if (!c.trivial()) out.insert(c);
  }
  return {out.begin(), out.end()};
}

Automorphism random_automorphism(Rng& rng, int moves) {
  auto autos = whitehead_automorphisms(3);
  auto phi = Automorphism::identity(3);
  for (int i = 0; i < moves; ++i) {
    phi = autos[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(autos.size()) - 1))].automorphism().compose(phi);
    // Mix in a permutation so products are not only of the second kind.
    if (uniform_int(rng, 0, 2) == 0) phi = Automorphism(3, {F3.parse("b"), F3.parse("C"), F3.parse("a")}).compose(phi);
  }
  return phi;
}

}  // namespace

TEST(WhiteheadGraph, Examples) {
  auto abc = whitehead_graph(3, c3("abc"));
  EXPECT_EQ(abc.num_edges(), 3);
  EXPECT_EQ(edge(abc, -1, 2), 1);
  EXPECT_EQ(edge(abc, -2, 3), 1);
  EXPECT_EQ(edge(abc, -3, 1), 1);
  EXPECT_EQ(connectivity_report(abc).kind, Connectivity::disconnected);

  auto six = whitehead_graph(3, c3("aabbcc"));
  EXPECT_EQ(six.num_edges(), 6);
  for (auto [x, y] : std::vector<std::pair<Letter, Letter>>{{-1, 1}, {-1, 2}, {-2, 2}, {-2, 3}, {-3, 3}, {-3, 1}}) {
    EXPECT_EQ(edge(six, x, y), 1);
  }
  EXPECT_EQ(connectivity_report(six).kind, Connectivity::two_connected);

  auto a = whitehead_graph(3, c3("a"));
  EXPECT_EQ(a.num_edges(), 1);
  EXPECT_EQ(edge(a, -1, 1), 1);
  EXPECT_EQ(connectivity_report(a).absent_generators, (std::vector<int>{2, 3}));

  EXPECT_THROW(whitehead_graph(3, CyclicWord()), Error);
}

TEST(WhiteheadGraph, CutVertex) {
  // abABc: the edges {A,b} {B,A} {a,B} {b,c} {C,a} form the path C a B A b c.
  auto r = connectivity_report(whitehead_graph(3, c3("abABc")));
  EXPECT_EQ(r.kind, Connectivity::cut_vertex);
  ASSERT_TRUE(r.cut);
  EXPECT_EQ(*r.cut, 1);
  EXPECT_EQ(connectivity_report(whitehead_graph(3, c3("abac"))).kind, Connectivity::disconnected);
}

TEST(WhiteheadGraph, MultiplicitySumsToLength) {
  for (const auto& w : all_cyclic_words(5)) EXPECT_EQ(whitehead_graph(3, w).num_edges(), static_cast<int>(w.size()));
}

TEST(WhiteheadAutomorphism, Construction) {
  EXPECT_THROW(WhiteheadAutomorphism(3, 1, {2}), Error);
  EXPECT_THROW(WhiteheadAutomorphism(3, 1, {1, -1}), Error);
  EXPECT_THROW(WhiteheadAutomorphism(3, 4, {4}), Error);
  EXPECT_THROW(WhiteheadAutomorphism(3, 1, {1, 2, 2}), Error);
  WhiteheadAutomorphism t(3, 1, {1, 2, -3});
  EXPECT_EQ(t.apply(F3.parse("b")), F3.parse("ba"));
  EXPECT_EQ(t.apply(F3.parse("c")), F3.parse("Ac"));
  EXPECT_EQ(t.apply(F3.parse("a")), F3.parse("a"));
  EXPECT_EQ(t.format(), "(a; a b C)");
  EXPECT_EQ(whitehead_automorphisms(3).size(), 90u);
}

TEST(WhiteheadAutomorphism, InverseAndConjugacy) {
  Rng rng(100);
  auto words = all_cyclic_words(4);
  for (const auto& t : whitehead_automorphisms(3)) {
    auto inv = t.inverse();
    EXPECT_EQ(t.automorphism().compose(inv.automorphism()), Automorphism::identity(3));
    for (int k = 0; k < 5; ++k) {
      const auto& w = words[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(words.size()) - 1))];
      EXPECT_EQ(inv.apply(t.apply(w)), w);
      // Any rotation of the representative gives the same class.
      auto letters = w.letters();
      std::rotate(letters.begin(), letters.begin() + 1, letters.end());
      EXPECT_EQ(t.apply(CyclicWord::of(letters)), t.apply(w));
    }
  }
}

TEST(WhiteheadAutomorphism, CutVertexGivesShortening) {
  // Words whose Whitehead graph is connected with a cut vertex are never of minimal length.
  int checked = 0;
  auto autos = whitehead_automorphisms(3);
  for (const auto& w : all_cyclic_words(6)) {
    auto r = connectivity_report(whitehead_graph(3, w));
    if (r.kind != Connectivity::cut_vertex || !r.absent_generators.empty()) continue;
    bool shorter = std::any_of(autos.begin(), autos.end(), [&](const auto& t) { return t.apply(w).size() < w.size(); });
    EXPECT_TRUE(shorter) << F3.format(w);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Reduce, Examples) {
  // abAb has abelianization (0, 2) in <a, b>, so it is not primitive there; its Whitehead graph
  // on a, A, b, B is a 4-cycle and it is already minimal.
  auto abab = reduce_to_minimal(3, c3("abAb"));
  EXPECT_EQ(abab.minimal.size(), 4u);
  EXPECT_TRUE(is_simple(3, c3("abAb")).simple);
  auto abc = reduce_to_minimal(3, c3("abc"));
  EXPECT_EQ(abc.minimal.size(), 1u);
  auto six = reduce_to_minimal(3, c3("aabbcc"));
  EXPECT_EQ(six.minimal, c3("aabbcc"));
  EXPECT_TRUE(six.steps.empty());
  EXPECT_TRUE(six.complete);
  for (const auto& u : six.level_set) EXPECT_EQ(u.size(), 6u);
}

TEST(Reduce, StepsShortenStrictly) {
  Rng rng(101);
  for (int k = 0; k < 50; ++k) {
    auto w = CyclicWord::of(random_word(rng, 3, 10));
    if (w.trivial()) continue;
    auto r = reduce_to_minimal(3, w);
    auto u = w;
    for (const auto& t : r.steps) {
      auto next = t.apply(u);
      EXPECT_LT(next.size(), u.size());
      u = next;
    }
    EXPECT_EQ(u, r.minimal);
    EXPECT_LE(r.steps.size(), w.size());
  }
}

TEST(Reduce, PrimitiveImagesReachLengthOne) {
  Rng rng(102);
  for (int k = 0; k < 40; ++k) {
    auto phi = random_automorphism(rng, uniform_int(rng, 1, 5));
    auto w = CyclicWord::of(phi.apply(F3.parse("a")));
    EXPECT_EQ(reduce_to_minimal(3, w).minimal.size(), 1u);
  }
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(3, c3("a")).simple);
  EXPECT_TRUE(is_simple(3, c3("abc")).simple);
  auto six = is_simple(3, c3("aabbcc"));
  EXPECT_FALSE(six.simple);
  EXPECT_TRUE(six.determined);
  EXPECT_TRUE(is_simple(3, c3("abAB")).simple);
  EXPECT_TRUE(is_simple(3, c3("abABc")).simple);
  EXPECT_THROW(is_simple(3, CyclicWord()), Error);
}

TEST(Simple, CapIsReported) {
  auto v = is_simple(3, c3("aabbcc"), 1);
  EXPECT_FALSE(v.determined);
}

TEST(Simple, ImagesOfSimpleWordsStaySimple) {
  Rng rng(103);
  for (int k = 0; k < 30; ++k) {
    auto phi = random_automorphism(rng, uniform_int(rng, 1, 4));
    EXPECT_TRUE(is_simple(3, CyclicWord::of(phi.apply(F3.parse("abAB")))).simple);
    EXPECT_TRUE(is_simple(3, CyclicWord::of(phi.apply(F3.parse("a")))).simple);
    EXPECT_FALSE(is_simple(3, CyclicWord::of(phi.apply(F3.parse("aabbcc")))).simple);
  }
}

TEST(Simple, AgreesWithProductSearchUpToLengthSix) {
  oracle::WhiteheadProductSearch search(3, 4);
  int simple = 0;
  int total = 0;
  for (const auto& w : all_cyclic_words(6)) {
    bool expected = search.simple(w);
    EXPECT_EQ(is_simple(3, w).simple, expected) << F3.format(w);
    simple += expected;
    ++total;
  }
  EXPECT_GT(simple, 0);
  EXPECT_LT(simple, total);
}
