#pragma once

#include <optional>
#include <vector>

#include "outer/lipschitz.hpp"
#include "outer/marked_graph.hpp"
#include "outer/stallings.hpp"

namespace outer {

/// Result of folding every gate of a slope-1 map until the first combinatorial change.
struct FoldStep {
  /// Length of time folded.
  Rational dt;
  /// Some pair of directions in a gate stopped sharing their image.
  bool gate_split = false;
  /// Some edge was used up by folds.
  bool edge_consumed = false;
  /// Fold map from the old graph to the new one; isometric on edges.
  GraphMap fold;
  /// Remaining map from the new graph to the target, slope 1 on every edge.
  GraphMap residual;
};

/// Folds initial segments within every gate of f simultaneously. f must have slope 1 on every
/// edge and at least two gates at every vertex. Returns nothing when every gate is a single direction.
std::optional<FoldStep> fold_step(const GraphMap& f);

/// Greedy folding path in the natural parametrization: snapshot i lives at times[i] and
/// residuals[i] maps it to the target with slope 1.
struct FoldingPath {
  std::vector<Rational> times;
  std::vector<MarkedMetricGraph> snapshots;
  std::vector<GraphMap> residuals;
  /// steps[i] maps snapshot i to snapshot i + 1.
  std::vector<GraphMap> steps;

  int size() const { return static_cast<int>(snapshots.size()); }
  const MarkedMetricGraph& target() const { return residuals.front().target(); }
  /// Snapshot i rescaled to volume 1.
  MarkedMetricGraph normalized(int i) const;
  /// Fold map from snapshot i to snapshot j (i <= j).
  GraphMap connecting_map(int i, int j) const;
};

/// Folding path of a map with slope 1 on every edge and at least two gates everywhere.
FoldingPath fold_from(const GraphMap& f);
/// Folding path induced by the optimal map g -> h, with g rescaled by the stretch factor.
/// Throws Error when the tension graph is proper or some vertex has one gate.
FoldingPath folding_path(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

struct StandardGeodesic {
  /// Volume-1 lengths on the edges of g at either end of the simplex segment.
  std::vector<Rational> start_lengths;
  std::vector<Rational> end_lengths;
  /// Edges of g whose length reaches 0; the folding path starts on that face.
  std::vector<int> collapsed;
  /// End of the simplex segment (collapsed edges removed), volume 1.
  MarkedMetricGraph middle;
  FoldingPath folding;
};

/// Simplex segment from g to the pullback of h's metric under the optimal map, then the folding path to h.
StandardGeodesic standard_geodesic(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

struct PathProbes {
  std::vector<CyclicWord> loops;
  std::vector<SubgroupCoreGraph> subgroups;
};

struct PathRow {
  Rational time;
  Rational volume;
  std::vector<Rational> loop_lengths;
  std::vector<int> illegal_turns;
  std::vector<Rational> subgroup_volumes;
  /// Longest legal segment inside a topological edge of each subgroup core, on the normalized snapshot.
  std::vector<Rational> longest_legal_segment;
};

/// One row per snapshot. Lengths and volumes are natural (unnormalized).
std::vector<PathRow> path_statistics(const FoldingPath& path, const PathProbes& probes);

}  // namespace outer
