#include <gtest/gtest.h>

#include <set>

#include "outer/error.hpp"
#include "outer/random.hpp"
#include "outer/stallings.hpp"
#include "oracles/oracles.hpp"

using namespace outer;

namespace {

const FreeGroup F3(3);

Word w3(const char* s) { return F3.parse(s); }

std::vector<Word> random_generators(Rng& rng, int count, int max_len) {
  std::vector<Word> gens;
  while (static_cast<int>(gens.size()) < count) {
    Word w = random_word(rng, 3, uniform_int(rng, 1, max_len));
    if (!w.empty()) gens.push_back(w);
  }
  return gens;
}

}  // namespace

TEST(CoreGraph, Examples) {
  auto a = core_graph(F3, {w3("a")}, true);
  EXPECT_EQ(a.num_vertices(), 1);
  EXPECT_EQ(a.num_edges(), 1);
  auto h = core_graph(F3, {w3("a"), w3("baB")}, true);
  EXPECT_EQ(h.num_vertices(), 2);
  EXPECT_EQ(h.num_edges(), 3);
  EXPECT_EQ(h.rank(), 2);
  EXPECT_EQ(canonical_code_ints(core_graph(F3, {w3("ab")}, false)),
            canonical_code_ints(core_graph(F3, {w3("ba")}, false)));
  EXPECT_THROW(core_graph(F3, {}, true), Error);
}

TEST(CoreGraph, FoldedAndCore) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = random_generators(rng, uniform_int(rng, 1, 3), 6);
    for (bool based : {true, false}) {
      auto h = core_graph(F3, gens, based);
      EXPECT_LE(h.rank(), static_cast<int>(gens.size()));
      for (int v = 0; v < h.num_vertices(); ++v) {
        // star is a map, so folding means the degree equals the star size
        int degree = 0;
        for (const auto& e : h.edges()) degree += (e.from == v) + (e.to == v);
        EXPECT_EQ(degree, static_cast<int>(h.star(v).size()));
        if (!based || h.basepoint() != v) EXPECT_GE(degree, 2);
      }
    }
  }
}

TEST(CoreGraph, ConfluentUnderGeneratorOrder) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    auto gens = random_generators(rng, 3, 5);
    auto reversed = std::vector<Word>(gens.rbegin(), gens.rend());
    EXPECT_EQ(canonical_code_ints(core_graph(F3, gens, true)), canonical_code_ints(core_graph(F3, reversed, true)));
  }
}

TEST(ContainsElement, Examples) {
  EXPECT_TRUE(contains_element(core_graph(F3, {w3("a")}, true), w3("aaa")));
  auto h = core_graph(F3, {w3("a"), w3("baB")}, true);
  EXPECT_FALSE(contains_element(h, w3("ab")));
  EXPECT_TRUE(contains_element(h, Word()));
  EXPECT_TRUE(contains_element(h, w3("baaBa")));
}

TEST(ContainsElement, AgreesWithEnumerationToLength8) {
  Rng rng(33);
  auto all = oracle::all_reduced_words(3, 8);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_generators(rng, 2, 4);
    auto members = *oracle::subgroup_elements(gens, 8);
    auto h = core_graph(F3, gens, true);
    for (const auto& w : all) EXPECT_EQ(contains_element(h, w), members.count(w) > 0) << F3.format(w);
  }
}

TEST(ConjugateInto, Examples) {
  auto cyc = [](std::vector<Word> g) { return core_graph(F3, g, false); };
  EXPECT_TRUE(conjugate_into(cyc({w3("baB")}), cyc({w3("a")})));
  EXPECT_TRUE(conjugate_into(cyc({w3("ab")}), cyc({w3("a"), w3("b")})));
  EXPECT_FALSE(conjugate_into(cyc({w3("a")}), cyc({w3("b"), w3("c")})));
}

TEST(ConjugateInto, AgreesWithConjugatorSearch) {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    auto hg = random_generators(rng, uniform_int(rng, 1, 2), 3);
    auto kg = random_generators(rng, uniform_int(rng, 1, 3), 3);
    if (trial % 3 == 0) {
      // Force some positive instances.
      Word c = random_word(rng, 3, uniform_int(rng, 0, 3));
      hg = {c * kg[0] * c.inverse()};
    }
    auto h = core_graph(F3, hg, false);
    auto k = core_graph(F3, kg, false);
    auto kb = core_graph(F3, kg, true);
    bool expected = oracle::conjugator_search(hg, kb, 6);
    auto morphism = conjugate_into(h, k);
    EXPECT_EQ(morphism.has_value(), expected);
    if (morphism) {
      for (const auto& e : h.edges()) {
        auto target = k.follow((*morphism)[static_cast<std::size_t>(e.from)], e.label);
        ASSERT_TRUE(target.has_value());
        EXPECT_EQ(*target, (*morphism)[static_cast<std::size_t>(e.to)]);
      }
    }
  }
}

TEST(ConjugateInto, ReflexiveAndTransitive) {
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = core_graph(F3, random_generators(rng, 2, 4), false);
    EXPECT_TRUE(conjugate_into(a, a));
    Word c = random_word(rng, 3, 3);
    auto gens = basis(a);
    std::vector<Word> sub{c * gens[0] * gens[0] * c.inverse()};
    std::vector<Word> mid = {c * gens[0] * c.inverse()};
    if (gens.size() > 1) mid.push_back(c * gens[1] * c.inverse());
    auto x = core_graph(F3, sub, false);
    auto y = core_graph(F3, mid, false);
    ASSERT_TRUE(conjugate_into(x, y));
    ASSERT_TRUE(conjugate_into(y, a));
    EXPECT_TRUE(conjugate_into(x, a));
  }
}

TEST(CanonicalCode, Examples) {
  auto code = [](std::vector<Word> g) { return FactorHandle::from_generators(3, g).code(); };
  EXPECT_EQ(code({w3("a")}), code({w3("caC")}));
  EXPECT_NE(code({w3("a"), w3("b")}), code({w3("a"), w3("c")}));
  EXPECT_THROW(FactorHandle::from_generators(3, {w3("a"), w3("b"), w3("c")}), Error);
}

TEST(CanonicalCode, InvariantUnderRepresentation) {
  Rng rng(36);
  std::vector<std::vector<Word>> subgroups = {{w3("a"), w3("b")}, {w3("ab"), w3("cB")}, {w3("abc")}};
  for (const auto& gens : subgroups) {
    auto reference = FactorHandle::from_generators(3, gens).code();
    for (int trial = 0; trial < 100; ++trial) {
      auto alt = oracle::random_representation(rng, gens, 6);
      EXPECT_EQ(FactorHandle::from_generators(3, alt).code(), reference);
    }
  }
}

TEST(CanonicalCode, DistinguishesNonIsomorphic) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto g1 = random_generators(rng, 1, 5);
    auto g2 = random_generators(rng, 1, 5);
    auto h1 = core_graph(F3, g1, false);
    auto h2 = core_graph(F3, g2, false);
    bool iso = conjugate_into(h1, h2).has_value() && conjugate_into(h2, h1).has_value() &&
               h1.num_edges() == h2.num_edges();
    EXPECT_EQ(canonical_code_ints(h1) == canonical_code_ints(h2), iso);
  }
}
