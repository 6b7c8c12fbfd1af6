#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "outer/free_group.hpp"

namespace outer {

/// Vertices are the 2N letters, indexed by letter_key. Each cyclically adjacent pair (x, y)
/// of the word contributes the edge {x^-1, y}.
struct WhiteheadGraph {
  int rank = 0;
  /// Symmetric; a loop {v, v} is counted once on the diagonal.
  std::vector<std::vector<int>> multiplicity;

  int num_vertices() const { return 2 * rank; }
  int num_edges() const;
  int degree(int key) const;
};

/// Throws Error on the trivial class.
WhiteheadGraph whitehead_graph(int rank, const CyclicWord& w);

enum class Connectivity { disconnected, cut_vertex, two_connected };
std::string to_string(Connectivity c);

/// Connectivity of the graph restricted to letters that occur.
struct ConnectivityReport {
  Connectivity kind = Connectivity::two_connected;
  /// Smallest cut vertex, when kind is cut_vertex.
  std::optional<Letter> cut;
  /// Generators occurring in neither orientation.
  std::vector<int> absent_generators;
};
ConnectivityReport connectivity_report(const WhiteheadGraph& g);

/// Whitehead automorphism (A, a): a stays fixed and every other letter x becomes
/// (a^-1 if x^-1 in A) x (a if x in A).
class WhiteheadAutomorphism {
 public:
  /// Throws Error unless special is in cut, special^-1 is not, and all letters fit the rank.
  WhiteheadAutomorphism(int rank, Letter special, std::vector<Letter> cut);

  int rank() const { return rank_; }
  Letter special() const { return special_; }
  /// Letters of the cut set in letter_key order.
  std::vector<Letter> cut() const;
  bool in_cut(Letter x) const { return (mask_ >> letter_key(x)) & 1U; }

  Word apply(const Word& w) const;
  CyclicWord apply(const CyclicWord& w) const;
  WhiteheadAutomorphism inverse() const;
  Automorphism automorphism() const;
  /// "(a; a b B)"
  std::string format() const;

  /// Orders by special letter, then by cut set.
  friend bool operator<(const WhiteheadAutomorphism& x, const WhiteheadAutomorphism& y);
  friend bool operator==(const WhiteheadAutomorphism& x, const WhiteheadAutomorphism& y) {
    return x.rank_ == y.rank_ && x.special_ == y.special_ && x.mask_ == y.mask_;
  }

 private:
  int rank_;
  Letter special_;
  unsigned mask_;
};

/// Every non-identity Whitehead automorphism of the second kind, in increasing order.
std::vector<WhiteheadAutomorphism> whitehead_automorphisms(int rank);

/// Least cyclic word among the images of w under permutations and inversions of the generators.
CyclicWord symmetry_class(int rank, const CyclicWord& w);

struct Reduction {
  CyclicWord minimal;
  /// Greedy shortening steps, in order.
  std::vector<WhiteheadAutomorphism> steps;
  /// Minimal-length words reached from `minimal` by length-preserving Whitehead automorphisms,
  /// one per symmetry class, in discovery order.
  std::vector<CyclicWord> level_set;
  /// False when the closure stopped at the cap.
  bool complete = true;
};

Reduction reduce_to_minimal(int rank, const CyclicWord& w, std::size_t cap = 100000);

struct SimplicityVerdict {
  bool simple = false;
  /// False when the level-set cap was hit before a decision.
  bool determined = true;
  /// Minimal-length word showing the verdict (omits a generator, or has a disconnected or cut-vertex graph).
  CyclicWord witness;
  std::string reason;
};

/// Whether the conjugacy class lies in a proper free factor. Rank 2 is accepted; see README.
SimplicityVerdict is_simple(int rank, const CyclicWord& w, std::size_t cap = 100000);

}  // namespace outer
