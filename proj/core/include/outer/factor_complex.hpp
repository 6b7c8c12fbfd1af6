#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outer/marked_graph.hpp"
#include "outer/stallings.hpp"

namespace outer {

/// Factors carried by proper core subgraphs of g, deduplicated. Throws Error for rank < 3.
std::vector<FactorHandle> project(const MarkedMetricGraph& g);

struct BallOptions {
  /// Largest cyclic-core edge count among enumerated factors.
  int bound = 6;
  /// Longest product of Whitehead automorphisms applied to the standard sub-bases.
  int product_length = 3;
  /// Enumeration stops once this many factors have been generated.
  std::size_t vertex_cap = 200000;
};

/// Finite window into the free factor graph: vertices are conjugacy classes of proper free
/// factors, edges are proper containments up to conjugacy.
class FactorBall {
 public:
  FactorBall(int rank, int bound, std::vector<FactorHandle> vertices, bool capped);

  int rank() const { return rank_; }
  int bound() const { return bound_; }
  bool capped() const { return capped_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<FactorHandle>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  std::optional<int> index_of(const FactorHandle& f) const;
  /// Hop counts from vertex i, -1 where unreachable.
  std::vector<int> distances_from(int i) const;
  /// Same ball with more vertices, appended after the existing ones.
  FactorBall extended(const std::vector<FactorHandle>& extra) const;

 private:
  void add_vertices(std::vector<FactorHandle> vertices);

  int rank_;
  int bound_;
  bool capped_;
  std::vector<FactorHandle> vertices_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> adjacency_;
};

/// Proper sub-bases of the standard basis and their images under short products of Whitehead
/// automorphisms, kept when their complexity is at most the bound, together with the seeds
/// (admitted whatever their complexity).
FactorBall build_ball(int rank, const std::vector<FactorHandle>& seeds, const BallOptions& options = {});

/// Hop count in the ball: an upper bound for the distance in the free factor graph.
/// Throws Error when a factor is not in the ball; nothing when they are not connected in it.
std::optional<int> distance_upper(const FactorBall& ball, const FactorHandle& a, const FactorHandle& b);

struct QgWindow {
  int begin = 0;
  int end = 0;
  int diameter = 0;
};

/// Greedy subdivision of a sequence of projections into windows of diameter at most K,
/// with the progress condition |i - j| <= d(t_i, t_j) + 2 checked between breakpoints.
/// Distances are ball upper bounds, so "consistent" is relative to those bounds.
struct QgCertificate {
  bool windows_ok = true;
  std::vector<int> breakpoints;
  std::vector<QgWindow> windows;
  std::optional<QgWindow> offending;
  bool consistent = true;
  std::vector<std::pair<int, int>> violations;
  /// Distance from the first breakpoint's image to each breakpoint's image.
  std::vector<int> progress;
};

/// Set distances are minima over pairs; window diameters are maxima. Throws Error when two
/// images needed for a decision are not connected in the ball.
QgCertificate check_reparam_quasigeodesic(const std::vector<std::vector<FactorHandle>>& sequence, int K,
                                          const FactorBall& ball);

}  // namespace outer
