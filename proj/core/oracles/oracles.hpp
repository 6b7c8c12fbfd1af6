#pragma once

// Slow, independent reference computations used to freeze derived test values.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "outer/free_group.hpp"
#include "outer/marked_graph.hpp"
#include "outer/random.hpp"
#include "outer/stallings.hpp"
#include "outer/traintrack.hpp"

namespace outer::oracle {

/// Every reduced word of length <= max_length, shortest first.
std::vector<Word> all_reduced_words(int rank, int max_length);

/// Elements of <generators> of length <= max_length, found by multiplying out products
/// while every partial product stays within max_length plus twice the total generator length.
/// Nothing when more than `budget` partial products would be visited.
std::optional<std::set<Word>> subgroup_elements(const std::vector<Word>& generators, int max_length,
                                                std::size_t budget = 2000000);

/// Whether c h c^-1 lies in k for every h, for some c of length <= max_length.
bool conjugator_search(const std::vector<Word>& h, const SubgroupCoreGraph& k_based, int max_length);

/// Another generating tuple of the same subgroup up to conjugacy: random Nielsen moves,
/// a shuffle, and a global conjugation.
std::vector<Word> random_representation(Rng& rng, std::vector<Word> generators, int moves);

/// Largest l_h / l_g over every tight loop of g crossing each edge at most twice.
Rational max_loop_stretch(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

/// Breadth-first search over (direction, crossed set) states for a legal loop crossing every
/// supported edge, or every supported direction when both_orientations is set.
bool has_spanning_legal_loop(const TrainTrackStructure& tt, bool both_orientations);

/// Whether some product of at most `depth` Whitehead automorphisms (A, a) maps a conjugacy class
/// to one omitting a generator. Automorphisms are built from generator images, and failed
/// searches are memoized up to permutations and inversions of the generators.
class WhiteheadProductSearch {
 public:
  WhiteheadProductSearch(int rank, int depth);
  bool simple(const CyclicWord& w);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool search(const CyclicWord& w, int depth);
  std::vector<Letter> canonical(const CyclicWord& w) const;

  int rank_;
  int depth_;
  std::vector<Automorphism> autos_;
  std::vector<std::vector<int>> symmetries_;
  std::map<std::vector<Letter>, int> memo_;
};

}  // namespace outer::oracle
