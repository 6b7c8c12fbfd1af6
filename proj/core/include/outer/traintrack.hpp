#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outer/marked_graph.hpp"

namespace outer {

/// Partition of the directions at each vertex into gates. gate[d] is the index of the
/// gate of direction d among the gates at tail(d), or -1 when d is outside the support.
struct TrainTrackStructure {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<int> gate;

  static TrainTrackStructure of(const MarkedMetricGraph& g, std::vector<int> gate);

  int num_edges() const { return static_cast<int>(edges.size()); }
  int tail(Dir d) const { return is_forward(d) ? edges[edge_of(d)].from : edges[edge_of(d)].to; }
  int head(Dir d) const { return tail(reverse(d)); }
  bool supported(int e) const { return gate[2 * e] >= 0 && gate[2 * e + 1] >= 0; }
  int num_gates(int v) const;
  /// Turn {a, b} of two directions at one vertex.
  bool legal_turn(Dir a, Dir b) const { return gate[a] != gate[b]; }
};

struct Turn {
  int vertex;
  Dir first;
  Dir second;
};

/// Crossed turns whose directions share a gate (cyclically for loops). Throws if the path leaves the support.
int illegal_turn_count(const TrainTrackStructure& tt, const EdgePath& path);
std::vector<Turn> illegal_turns(const TrainTrackStructure& tt, const EdgePath& path);
bool is_legal(const TrainTrackStructure& tt, const EdgePath& path);

/// Nodes are directions; arc d -> d' when head(d) = tail(d') and the turn {reverse(d), d'} is legal.
struct DirectionDigraph {
  std::vector<std::vector<Dir>> arcs;
  int num_nodes() const { return static_cast<int>(arcs.size()); }
};
DirectionDigraph direction_digraph(const TrainTrackStructure& tt);

enum class Recurrence { birecurrent, recurrent, reducible, one_orientation };
std::string to_string(Recurrence r);

struct RecurrenceReport {
  Recurrence kind;
  /// Edges of the terminal class (reducible / one_orientation), or of the whole support.
  std::vector<int> subgraph;
  /// Legal loop crossing every supported edge (both ways when birecurrent).
  std::optional<EdgePath> certificate;
};
RecurrenceReport classify_recurrence(const TrainTrackStructure& tt);
std::optional<EdgePath> find_spanning_legal_loop(const TrainTrackStructure& tt);

}  // namespace outer
