#pragma once

#include <string>
#include <vector>

#include "outer/cover.hpp"
#include "outer/marked_graph.hpp"
#include "outer/traintrack.hpp"

namespace outer {

enum class Shape { circle, figure_eight, barbell };
std::string to_string(Shape s);

struct Candidate {
  EdgePath path;
  Shape shape;
};

/// Embedded circles, figure-eights and barbells, each once up to rotation and inversion.
std::vector<Candidate> candidates(const MarkedMetricGraph& g);

struct Stretch {
  Rational lambda;
  Candidate witness;
};

/// Largest ratio l_h(a) / l_g(a) over candidates a of g; the witness is the first candidate attaining it.
Stretch stretch_factor(const MarkedMetricGraph& g, const MarkedMetricGraph& h);
/// Stretch factor between the volume-normalized graphs.
Rational distance(const MarkedMetricGraph& g, const MarkedMetricGraph& h);
/// Length of the image of a loop of g, measured in h.
Rational image_length(const MarkedMetricGraph& g, const MarkedMetricGraph& h, const std::vector<Dir>& loop);

/// Equivariant straight map from g to h: vertex v lifts to vertex_images[v] in the universal cover of h,
/// and each edge runs at constant speed along the geodesic between its endpoint images.
class GraphMap {
 public:
  GraphMap(MarkedMetricGraph source, MarkedMetricGraph target, std::vector<TreePoint> vertex_images);

  const MarkedMetricGraph& source() const { return source_; }
  const MarkedMetricGraph& target() const { return cover_.graph(); }
  const Cover& cover() const { return cover_; }
  const std::vector<TreePoint>& vertex_images() const { return images_; }

  /// Far end of the lift of d that starts at vertex_images[tail(d)].
  TreePoint far_end(Dir d) const;
  std::vector<Piece> image(Dir d) const;
  Rational image_length(int e) const;
  Rational slope(int e) const;
  /// Largest slope.
  Rational sigma() const;
  /// Image of a point of the source's universal cover under the lifted map.
  TreePoint lift(const TreePoint& p) const;
  /// Germ of the image of d at vertex_images[tail(d)] (a direction of the target), or -1 if degenerate.
  Dir germ(Dir d) const;

  /// Same map read with a different source marking gauge; see folding.
  void set_vertex_images(std::vector<TreePoint> images) { images_ = std::move(images); }

 private:
  MarkedMetricGraph source_;
  Cover cover_;
  std::vector<TreePoint> images_;
};

/// Every vertex to the image of its spanning-tree lift; tree edges collapse.
GraphMap initial_map(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

/// Edges of maximal slope (exact comparison).
std::vector<bool> tension_graph(const GraphMap& f);
/// Gates by germ of image on the restriction. Throws on a collapsed edge in the restriction.
TrainTrackStructure gates(const GraphMap& f, const std::vector<bool>& restrict);

/// Slides vertices with a single gate in the tension graph until every remaining tension
/// vertex has at least two gates. Keeps sigma.
GraphMap tighten_map(const GraphMap& f);

/// Map with sigma equal to the stretch factor, after tighten_map.
GraphMap optimal_map(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

struct SimplexOptimum {
  std::vector<Rational> lengths;
  Rational lambda;
  /// Some coordinate of every optimum vanishes.
  bool boundary = false;
};
/// Volume-1 lengths on g's graph minimizing the stretch factor to h, by an exact LP.
/// Among optima, one with the largest minimal edge length is returned.
SimplexOptimum optimize_in_simplex(const MarkedMetricGraph& g, const MarkedMetricGraph& h);

}  // namespace outer
