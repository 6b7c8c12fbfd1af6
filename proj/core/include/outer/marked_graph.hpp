#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outer/free_group.hpp"
#include "outer/random.hpp"
#include "outer/rational.hpp"
#include "outer/stallings.hpp"

namespace outer {

/// Oriented edge: 2e runs along edge e, 2e+1 against it.
using Dir = int;

constexpr int edge_of(Dir d) { return d >> 1; }
constexpr Dir reverse(Dir d) { return d ^ 1; }
constexpr Dir forward_dir(int e) { return 2 * e; }
constexpr bool is_forward(Dir d) { return (d & 1) == 0; }

struct Edge {
  int from;
  int to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgePath {
  std::vector<Dir> dirs;
  bool cyclic = false;
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Metric graph with a two-way marking: loops[i] is a based loop reading x_{i+1},
/// labels[e] is the word read along edge e.
struct MarkedMetricGraph {
  int rank = 0;
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  std::vector<std::vector<Dir>> loops;
  std::vector<Word> labels;
  int basepoint = 0;
  bool subdivided = false;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int tail(Dir d) const { return is_forward(d) ? edges[edge_of(d)].from : edges[edge_of(d)].to; }
  int head(Dir d) const { return tail(reverse(d)); }
  const Rational& length(Dir d) const { return lengths[static_cast<std::size_t>(edge_of(d))]; }
  Word label(Dir d) const { return is_forward(d) ? labels[edge_of(d)] : labels[edge_of(d)].inverse(); }
  /// Directions leaving each vertex, in increasing order.
  std::vector<std::vector<Dir>> stars() const;
  int degree(int v) const;
};

struct Diagnostic {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> problems;
  Rational volume;
  int rank = 0;
  bool ok() const { return problems.empty(); }
  bool has(const std::string& code) const;
};

/// Codes: "bad incidence", "disconnected", "rank mismatch", "nonpositive length",
/// "low degree", "bad basepoint", "marking mismatch".
ValidationReport validate(const MarkedMetricGraph& g);
/// Throws Error listing the problems when validation fails.
void require_valid(const MarkedMetricGraph& g);

/// Removes backtracking (and, for cyclic paths, across the wrap).
std::vector<Dir> tighten(const std::vector<Dir>& path, bool cyclic = false);
Word path_word(const MarkedMetricGraph& g, const std::vector<Dir>& path);
Rational path_length(const MarkedMetricGraph& g, const std::vector<Dir>& path);
/// Untightened based loop obtained by concatenating marking loops.
std::vector<Dir> word_path(const MarkedMetricGraph& g, const Word& w);

EdgePath loop_representative(const MarkedMetricGraph& g, const CyclicWord& w);
Rational translation_length(const MarkedMetricGraph& g, const CyclicWord& w);
Rational translation_length(const MarkedMetricGraph& g, const Word& w);

Rational volume(const MarkedMetricGraph& g);
MarkedMetricGraph normalize(const MarkedMetricGraph& g);
MarkedMetricGraph scale(const MarkedMetricGraph& g, const Rational& factor);
MarkedMetricGraph with_lengths(const MarkedMetricGraph& g, const std::vector<Rational>& lengths);

/// Maximal chains of edges through degree-2 vertices, each listed once.
std::vector<std::vector<Dir>> topological_edges(const MarkedMetricGraph& g);

/// One handle per connected proper core subgraph, deduplicated by canonical code.
std::vector<FactorHandle> subgraph_factors(const MarkedMetricGraph& g);

/// Core of the cover of g corresponding to h. Labels are +-(edge index + 1) of g.
struct ImmersedCore {
  SubgroupCoreGraph core;
  Rational volume;
};
ImmersedCore subgroup_core_in_graph(const MarkedMetricGraph& g, const SubgroupCoreGraph& h);
Dir dir_of_label(Letter label);
Letter label_of_dir(Dir d);

/// Same point of outer space with the basepoint moved to v.
MarkedMetricGraph rebase(const MarkedMetricGraph& g, int v);

/// Where an old edge sits inside the graph produced by `smooth`: along `dir`, starting at `offset`.
struct EdgePlacement {
  Dir dir;
  Rational offset;
};
/// Merges edges across degree-2 vertices other than the basepoint.
MarkedMetricGraph smooth(const MarkedMetricGraph& g, std::vector<EdgePlacement>* placement = nullptr);

struct MarkedIsometry {
  std::vector<int> vertex_map;
  std::vector<Dir> edge_map;
};
/// Length-preserving graph isomorphism carrying one marking to the other up to conjugation.
std::optional<MarkedIsometry> find_marked_isometry(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

/// Marking from a BFS spanning tree at `basepoint`; the i-th non-tree edge reads x_i.
MarkedMetricGraph standard_marking(int num_vertices, const std::vector<Edge>& edges, const std::vector<Rational>& lengths,
                                   int basepoint = 0);
/// Changes the marking by phi: words read along edges are replaced by their phi-images.
MarkedMetricGraph twist(const MarkedMetricGraph& g, const Automorphism& phi);
MarkedMetricGraph rose(const std::vector<Rational>& lengths);

struct RandomGraphOptions {
  int rank = 3;
  int max_denominator = 12;
  int automorphism_moves = 6;
  /// Vertex count; 0 picks one uniformly from [1, 2 rank - 2].
  int vertices = 0;
};
/// Spanning tree plus chords, rejected until every degree is at least 3; random lengths, volume 1.
MarkedMetricGraph random_marked_graph(Rng& rng, const RandomGraphOptions& options);

}  // namespace outer
