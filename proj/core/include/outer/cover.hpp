#pragma once

#include <vector>

#include "outer/marked_graph.hpp"

namespace outer {

/// Point of the universal cover: a tight path from the base lift, optionally followed
/// by part of one more edge.
struct TreePoint {
  std::vector<Dir> path;
  Dir partial = -1;
  Rational offset;

  bool is_vertex() const { return partial < 0; }
  friend bool operator==(const TreePoint& a, const TreePoint& b) {
    return a.path == b.path && a.partial == b.partial && (a.partial < 0 || a.offset == b.offset);
  }
};

/// Sub-segment [from, to] of an oriented edge, measured from its tail.
struct Piece {
  Dir dir;
  Rational from;
  Rational to;
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Point of a graph: a vertex, or a point inside an edge at `offset` along `dir`.
struct GraphPoint {
  int vertex = -1;
  Dir dir = -1;
  Rational offset;
};

/// Metric arithmetic in the universal cover of a marked graph, with F_N acting through the marking loops.
class Cover {
 public:
  explicit Cover(MarkedMetricGraph g);

  const MarkedMetricGraph& graph() const { return g_; }
  TreePoint root() const { return {}; }

  /// Vertex reached by the tight path.
  TreePoint vertex(std::vector<Dir> path) const;
  /// The lift g.(1, x) of vertex x; (1, x) is the end of a path from the root reading the trivial word.
  TreePoint lift(int x, const Word& g = Word()) const;
  TreePoint act(const Word& w, const TreePoint& p) const;
  Rational distance(const TreePoint& p, const TreePoint& q) const;
  Rational depth(const TreePoint& p) const;
  /// (d(b,p) + d(b,q) - d(p,q)) / 2, the length of the common initial segment of [b,p] and [b,q].
  Rational gromov(const TreePoint& b, const TreePoint& p, const TreePoint& q) const;
  /// Point at distance t from p on the geodesic to q (0 <= t <= d(p,q)).
  TreePoint along(const TreePoint& p, const TreePoint& q, const Rational& t) const;
  /// The geodesic [p, q] projected to the graph.
  std::vector<Piece> geodesic(const TreePoint& p, const TreePoint& q) const;
  GraphPoint project(const TreePoint& p) const;
  /// Tight path from the root to the vertex w.root.
  const std::vector<Dir>& generator_path(int i) const { return paths_.at(static_cast<std::size_t>(i - 1)); }

 private:
  struct Step {
    Dir dir;
    Rational amount;
  };
  std::vector<Step> steps(const TreePoint& p) const;
  Rational shared(const std::vector<Step>& a, const std::vector<Step>& b) const;
  TreePoint point_at(const std::vector<Step>& s, const Rational& arc) const;

  MarkedMetricGraph g_;
  std::vector<std::vector<Dir>> paths_;
  std::vector<std::vector<Dir>> vertex_paths_;
};

}  // namespace outer
