#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "outer/marked_graph.hpp"
#include "outer/traintrack.hpp"

namespace outer::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline MarkedMetricGraph rose3(const char* a, const char* b, const char* c) { return rose({q(a), q(b), q(c)}); }

/// Two vertices joined by four edges (rank 3).
inline MarkedMetricGraph theta4(std::vector<Rational> lengths = {}) {
  if (lengths.empty()) lengths = {q("1/4"), q("1/4"), q("1/4"), q("1/4")};
  return standard_marking(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, lengths);
}

/// Loop at 0, edge 0-1, loop at 1, plus an extra loop at 0 (rank 3, degrees 5 and 3).
inline MarkedMetricGraph barbell_plus(std::vector<Rational> lengths = {}) {
  if (lengths.empty()) lengths = {q("1/4"), q("1/4"), q("1/4"), q("1/4")};
  return standard_marking(2, {{0, 0}, {0, 1}, {1, 1}, {0, 0}}, lengths);
}

inline std::vector<MarkedMetricGraph> random_graphs(std::uint64_t seed, int count, RandomGraphOptions options = {}) {
  Rng rng(seed);
  std::vector<MarkedMetricGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_marked_graph(rng, options));
  return out;
}

/// Random volume-1 lengths on the same graph.
inline MarkedMetricGraph random_point_in_simplex(Rng& rng, const MarkedMetricGraph& g, int denominator = 20) {
  std::vector<Rational> lengths;
  for (int e = 0; e < g.num_edges(); ++e) lengths.push_back(Rational(uniform_int(rng, 1, denominator)));
  return normalize(with_lengths(g, lengths));
}

/// Inserts a degree-2 vertex at distance t along edge e.
inline MarkedMetricGraph subdivide(const MarkedMetricGraph& g, int e, const Rational& t) {
  MarkedMetricGraph h = g;
  const int v = h.num_vertices++;
  const int f = h.num_edges();
  Edge old = h.edges[static_cast<std::size_t>(e)];
  h.edges[static_cast<std::size_t>(e)] = {old.from, v};
  h.edges.push_back({v, old.to});
  h.lengths.push_back(h.lengths[static_cast<std::size_t>(e)] - t);
  h.lengths[static_cast<std::size_t>(e)] = t;
  h.labels.push_back(Word());
  for (auto& loop : h.loops) {
    std::vector<Dir> out;
    for (Dir d : loop) {
      if (edge_of(d) != e) {
        out.push_back(d);
      } else if (is_forward(d)) {
        out.push_back(2 * e);
        out.push_back(2 * f);
      } else {
        out.push_back(2 * f + 1);
        out.push_back(2 * e + 1);
      }
    }
    loop = out;
  }
  h.subdivided = true;
  return h;
}

/// Random gate partition with at least min_gates gates at each vertex where possible.
inline TrainTrackStructure random_structure(Rng& rng, const MarkedMetricGraph& g, int min_gates) {
  std::vector<int> gate(static_cast<std::size_t>(2 * g.num_edges()));
  for (const auto& star : g.stars()) {
    int k = uniform_int(rng, std::min(min_gates, static_cast<int>(star.size())), static_cast<int>(star.size()));
    for (std::size_t i = 0; i < star.size(); ++i) {
      gate[static_cast<std::size_t>(star[i])] = i < static_cast<std::size_t>(k) ? static_cast<int>(i) : uniform_int(rng, 0, k - 1);
    }
  }
  return TrainTrackStructure::of(g, gate);
}

}  // namespace outer::testing
