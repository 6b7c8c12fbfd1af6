#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outer/free_group.hpp"

namespace outer {

/// Reading the edge from `from` to `to` spells `label`; reading it backwards spells -label.
struct LabeledEdge {
  int from;
  int to;
  Letter label;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Folded labeled graph with core pruning. Labels are nonzero integers, so the same
/// engine serves words in F_N and paths in a marked graph (label = +-(edge index + 1)).
class SubgroupCoreGraph {
 public:
  SubgroupCoreGraph() = default;

  /// Folds, then prunes to the core (keeping the basepoint when one is given).
  static SubgroupCoreGraph fold(int num_vertices, const std::vector<LabeledEdge>& edges,
                                std::optional<int> basepoint);

  int num_vertices() const { return static_cast<int>(star_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// Edges with positive labels, in a deterministic order.
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::optional<int> basepoint() const { return basepoint_; }
  bool based() const { return basepoint_.has_value(); }
  int rank() const { return num_edges() - num_vertices() + 1; }
  bool trivial() const { return edges_.empty(); }

  /// Signed label -> neighbour for the edges leaving v.
  const std::map<Letter, int>& star(int v) const { return star_.at(static_cast<std::size_t>(v)); }
  std::optional<int> follow(int v, Letter label) const;
  /// Endpoint of the path spelling w from v, if it can be read.
  std::optional<int> read(int v, const Word& w) const;

  SubgroupCoreGraph cyclic_core() const;

 private:
  std::vector<LabeledEdge> edges_;
  std::vector<std::map<Letter, int>> star_;
  std::optional<int> basepoint_;
};

SubgroupCoreGraph core_graph(const FreeGroup& group, const std::vector<Word>& generators, bool based);

bool contains_element(const SubgroupCoreGraph& h, const Word& g);

/// Label-preserving morphism from H's vertices to K's, if some conjugate of H lies in K.
std::optional<std::vector<int>> conjugate_into(const SubgroupCoreGraph& h, const SubgroupCoreGraph& k);

/// Free basis of pi_1 at the basepoint (vertex 0 when unbased), via a BFS spanning tree.
std::vector<Word> basis(const SubgroupCoreGraph& h);

/// Minimum BFS code over start vertices (the basepoint only, when based).
std::vector<int> canonical_code_ints(const SubgroupCoreGraph& h);

/// Conjugacy class of a proper free factor: cyclic core plus canonical code.
/// Built only from subgraph bases, images of coordinate factors, or explicit sub-bases;
/// free-factor-ness is not rechecked.
class FactorHandle {
 public:
  static FactorHandle from_generators(int ambient_rank, const std::vector<Word>& generators);

  const SubgroupCoreGraph& core() const { return core_; }
  const std::string& code() const { return code_; }
  std::string code_hex() const;
  int rank() const { return core_.rank(); }
  int ambient_rank() const { return ambient_rank_; }
  /// Cyclic-core edge count.
  int complexity() const { return core_.num_edges(); }
  /// A basis of a representative subgroup.
  const std::vector<Word>& generators() const { return generators_; }

  friend bool operator==(const FactorHandle& a, const FactorHandle& b) { return a.code_ == b.code_; }
  friend bool operator<(const FactorHandle& a, const FactorHandle& b) { return a.code_ < b.code_; }

 private:
  friend FactorHandle canonical_code(const SubgroupCoreGraph& h, int ambient_rank);
  SubgroupCoreGraph core_;
  std::string code_;
  int ambient_rank_ = 0;
  std::vector<Word> generators_;
};

FactorHandle canonical_code(const SubgroupCoreGraph& h, int ambient_rank);

std::string to_dot(const SubgroupCoreGraph& h, const FreeGroup& group);

}  // namespace outer
