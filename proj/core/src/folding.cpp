#include "outer/folding.hpp"

#include <algorithm>

#include "outer/error.hpp"
#include "outer/traintrack.hpp"

namespace outer {

namespace {

// g.(1, vertex) when vertex >= 0, otherwise the point at `offset` along edge `edge` from g.(1, tail).
struct Spot {
  Word g;
  int vertex = -1;
  int edge = -1;
  Rational offset;
};

// A graph under surgery together with its vertex images in the target and some tracked points.
struct State {
  MarkedMetricGraph g;
  std::vector<TreePoint> images;
  std::vector<Spot> spots;
  /// Edge of the graph this edge started as, or -1.
  std::vector<int> origin;
};

Dir shift_dir(Dir d, int removed) { return edge_of(d) > removed ? d - 2 : d; }

void remove_vertex(State& s, int v) {
  for (auto& e : s.g.edges) {
    if (e.from > v) --e.from;
    if (e.to > v) --e.to;
  }
  for (auto& sp : s.spots) {
    if (sp.vertex > v) --sp.vertex;
  }
  s.images.erase(s.images.begin() + v);
  if (s.g.basepoint > v) --s.g.basepoint;
  --s.g.num_vertices;
}

void remove_edge(State& s, int e) {
  auto& g = s.g;
  g.edges.erase(g.edges.begin() + e);
  g.lengths.erase(g.lengths.begin() + e);
  g.labels.erase(g.labels.begin() + e);
  s.origin.erase(s.origin.begin() + e);
  for (auto& sp : s.spots) {
    if (sp.edge > e) --sp.edge;
  }
  for (auto& loop : g.loops) {
    std::vector<Dir> out;
    for (Dir d : loop) {
      if (edge_of(d) != e) out.push_back(shift_dir(d, e));
    }
    loop = tighten(out);
  }
}

// Identifies the endpoints of a zero-length edge, keeping the basepoint.
void collapse_edge(State& s, int e) {
  auto& g = s.g;
  const Edge ed = g.edges[static_cast<std::size_t>(e)];
  if (ed.from == ed.to) throw InternalError("zero-length loop while collapsing");
  int keep = ed.from;
  int drop = ed.to;
  Word u = g.labels[static_cast<std::size_t>(e)];
  if (drop == g.basepoint) {
    std::swap(keep, drop);
    u = u.inverse();
  }
  // (1, drop) is (u^-1, keep).
  const Word ui = u.inverse();
  for (auto& sp : s.spots) {
    if (sp.edge == e) {
      sp.vertex = ed.from;
      sp.edge = -1;
      sp.offset = 0;
    }
    if (sp.vertex == drop) {
      sp.g = sp.g * ui;
      sp.vertex = keep;
    } else if (sp.edge >= 0 && g.edges[static_cast<std::size_t>(sp.edge)].from == drop) {
      sp.g = sp.g * ui;
    }
  }
  for (int f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    auto& x = g.edges[static_cast<std::size_t>(f)];
    auto& label = g.labels[static_cast<std::size_t>(f)];
    if (x.from == drop) {
      x.from = keep;
      label = u * label;
    }
    if (x.to == drop) {
      x.to = keep;
      label = label * ui;
    }
  }
  remove_edge(s, e);
  remove_vertex(s, drop);
}

std::vector<Dir> replace_pair(const std::vector<Dir>& path, Dir a, Dir b, Dir merged) {
  std::vector<Dir> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i + 1 < path.size() && path[i] == a && path[i + 1] == b) {
      out.push_back(merged);
      ++i;
    } else if (i + 1 < path.size() && path[i] == reverse(b) && path[i + 1] == reverse(a)) {
      out.push_back(reverse(merged));
      ++i;
    } else {
      out.push_back(path[i]);
    }
  }
  return out;
}

// Merges the two edges at a degree-2 vertex w into one.
void smooth_vertex(State& s, int w) {
  auto& g = s.g;
  const auto star = g.stars()[static_cast<std::size_t>(w)];
  const Dir a = reverse(star[0]);
  const Dir b = star[1];
  const int ea = edge_of(a);
  const int eb = edge_of(b);
  const Rational la = g.length(a);
  const Rational lb = g.length(b);
  const Word label_a = g.label(a);
  const Word back = label_a.inverse();
  for (auto& sp : s.spots) {
    if (sp.vertex == w) {
      sp = Spot{sp.g * back, -1, ea, la};
      continue;
    }
    if (sp.edge != ea && sp.edge != eb) continue;
    const Dir x = sp.edge == ea ? a : b;
    Word gauge = sp.g;
    Rational off = sp.offset;
    if (!is_forward(x)) {
      gauge = gauge * g.labels[static_cast<std::size_t>(sp.edge)];
      off = g.length(x) - off;
    }
    if (x == b) {
      gauge = gauge * back;
      off += la;
    }
    sp = Spot{gauge, -1, ea, off};
  }
  g.edges[static_cast<std::size_t>(ea)] = Edge{g.tail(a), g.head(b)};
  g.labels[static_cast<std::size_t>(ea)] = label_a * g.label(b);
  g.lengths[static_cast<std::size_t>(ea)] = la + lb;
  s.origin[static_cast<std::size_t>(ea)] = -1;
  for (auto& loop : g.loops) loop = replace_pair(loop, a, b, 2 * ea);
  remove_edge(s, eb);
  remove_vertex(s, w);
}

void collapse_zero_edges(State& s, std::vector<int>* collapsed = nullptr) {
  while (true) {
    int e = -1;
    for (int f = 0; f < s.g.num_edges(); ++f) {
      if (s.g.lengths[static_cast<std::size_t>(f)] == 0) {
        e = f;
        break;
      }
    }
    if (e < 0) return;
    if (collapsed && s.origin[static_cast<std::size_t>(e)] >= 0) collapsed->push_back(s.origin[static_cast<std::size_t>(e)]);
    collapse_edge(s, e);
  }
}

void smooth_all(State& s) {
  while (true) {
    auto stars = s.g.stars();
    int w = -1;
    for (int v = 0; v < s.g.num_vertices; ++v) {
      const auto& st = stars[static_cast<std::size_t>(v)];
      if (v != s.g.basepoint && st.size() == 2 && edge_of(st[0]) != edge_of(st[1])) {
        w = v;
        break;
      }
    }
    if (w < 0) break;
    smooth_vertex(s, w);
  }
  auto stars = s.g.stars();
  s.g.subdivided = std::any_of(stars.begin(), stars.end(), [](const auto& st) { return st.size() < 3; });
}

TreePoint spot_point(const Cover& cover, const Spot& sp) {
  if (sp.vertex >= 0) return cover.lift(sp.vertex, sp.g);
  const auto& g = cover.graph();
  const Edge& e = g.edges[static_cast<std::size_t>(sp.edge)];
  TreePoint a = cover.lift(e.from, sp.g);
  TreePoint b = cover.lift(e.to, sp.g * g.labels[static_cast<std::size_t>(sp.edge)]);
  return cover.along(a, b, sp.offset);
}

State start(const GraphMap& f) {
  State s{f.source(), f.vertex_images(), {}, {}};
  for (int e = 0; e < s.g.num_edges(); ++e) s.origin.push_back(e);
  return s;
}

void require_slope_one(const GraphMap& f) {
  for (int e = 0; e < f.source().num_edges(); ++e) {
    if (f.slope(e) != 1) throw Error("folding needs slope 1 on every edge (edge " + std::to_string(e) + ")");
  }
}

void require_two_gates(const TrainTrackStructure& tt) {
  for (int v = 0; v < tt.num_vertices; ++v) {
    if (tt.num_gates(v) < 2) throw Error("folding needs two gates at every vertex (vertex " + std::to_string(v) + ")");
  }
}

// Degree-2 basepoints moved and smoothed away, for isometry checks.
MarkedMetricGraph clean(const MarkedMetricGraph& g) {
  MarkedMetricGraph h = g;
  if (h.degree(h.basepoint) == 2) {
    for (int v = 0; v < h.num_vertices; ++v) {
      if (h.degree(v) >= 3) {
        h = rebase(h, v);
        break;
      }
    }
  }
  h = smooth(h);
  h.subdivided = false;
  return h;
}

}  // namespace

std::optional<FoldStep> fold_step(const GraphMap& f) {
  const auto& g = f.source();
  const int m = g.num_edges();
  require_slope_one(f);
  auto tt = gates(f, std::vector<bool>(static_cast<std::size_t>(m), true));
  require_two_gates(tt);

  std::vector<std::vector<Dir>> folding;
  std::vector<int> owner(static_cast<std::size_t>(2 * m), -1);
  for (const auto& star : g.stars()) {
    std::vector<std::vector<Dir>> by_gate;
    for (Dir d : star) {
      auto k = static_cast<std::size_t>(tt.gate[static_cast<std::size_t>(d)]);
      if (by_gate.size() <= k) by_gate.resize(k + 1);
      by_gate[k].push_back(d);
    }
    for (auto& gate : by_gate) {
      if (gate.size() < 2) continue;
      for (Dir d : gate) owner[static_cast<std::size_t>(d)] = static_cast<int>(folding.size());
      folding.push_back(std::move(gate));
    }
  }
  if (folding.empty()) return std::nullopt;

  const auto& cover = f.cover();
  const auto& images = f.vertex_images();
  std::optional<Rational> dt;
  std::vector<Rational> overlaps;
  for (const auto& gate : folding) {
    const TreePoint& p = images[static_cast<std::size_t>(g.tail(gate[0]))];
    for (std::size_t i = 0; i < gate.size(); ++i) {
      for (std::size_t j = i + 1; j < gate.size(); ++j) {
        overlaps.push_back(cover.gromov(p, f.far_end(gate[i]), f.far_end(gate[j])));
      }
    }
  }
  std::vector<int> ends(static_cast<std::size_t>(m), 0);
  for (Dir d = 0; d < 2 * m; ++d) {
    if (owner[static_cast<std::size_t>(d)] >= 0) ++ends[static_cast<std::size_t>(edge_of(d))];
  }
  std::vector<Rational> budgets;
  for (int e = 0; e < m; ++e) {
    if (ends[static_cast<std::size_t>(e)] > 0) budgets.push_back(g.lengths[static_cast<std::size_t>(e)] / ends[static_cast<std::size_t>(e)]);
  }
  Rational step = *std::min_element(overlaps.begin(), overlaps.end());
  if (!budgets.empty()) step = std::min(step, *std::min_element(budgets.begin(), budgets.end()));
  if (step <= 0) throw InternalError("fold of length zero");

  State s = start(f);
  for (int v = 0; v < g.num_vertices; ++v) s.spots.push_back(Spot{Word(), v, -1, 0});
  const int n = g.num_vertices;
  for (std::size_t k = 0; k < folding.size(); ++k) {
    const auto& gate = folding[k];
    const int v = g.tail(gate[0]);
    const int vk = n + static_cast<int>(k);
    s.images.push_back(cover.along(images[static_cast<std::size_t>(v)], f.far_end(gate[0]), step));
    for (Dir d : gate) {
      auto& edge = s.g.edges[static_cast<std::size_t>(edge_of(d))];
      (is_forward(d) ? edge.from : edge.to) = vk;
    }
    s.g.edges.push_back(Edge{v, vk});
    s.g.lengths.push_back(step);
    s.g.labels.push_back(Word());
    s.origin.push_back(-1);
  }
  s.g.num_vertices += static_cast<int>(folding.size());
  for (int e = 0; e < m; ++e) s.g.lengths[static_cast<std::size_t>(e)] -= step * ends[static_cast<std::size_t>(e)];
  for (auto& loop : s.g.loops) {
    std::vector<Dir> out;
    for (Dir d : loop) {
      int k = owner[static_cast<std::size_t>(d)];
      if (k >= 0) out.push_back(2 * (m + k));
      out.push_back(d);
      k = owner[static_cast<std::size_t>(reverse(d))];
      if (k >= 0) out.push_back(2 * (m + k) + 1);
    }
    loop = tighten(out);
  }
  collapse_zero_edges(s);
  smooth_all(s);

  Cover next(s.g);
  std::vector<TreePoint> fold_images;
  for (const auto& sp : s.spots) fold_images.push_back(spot_point(next, sp));
  bool split = std::find(overlaps.begin(), overlaps.end(), step) != overlaps.end();
  bool consumed = std::find(budgets.begin(), budgets.end(), step) != budgets.end();
  return FoldStep{step, split, consumed, GraphMap(g, s.g, std::move(fold_images)),
                  GraphMap(s.g, f.target(), std::move(s.images))};
}

MarkedMetricGraph FoldingPath::normalized(int i) const { return normalize(snapshots.at(static_cast<std::size_t>(i))); }

GraphMap FoldingPath::connecting_map(int i, int j) const {
  if (i < 0 || j >= size() || i > j) throw Error("connecting map needs 0 <= i <= j < size");
  const auto& from = snapshots[static_cast<std::size_t>(i)];
  std::vector<TreePoint> images;
  if (i == j) {
    Cover cover(from);
    for (int v = 0; v < from.num_vertices; ++v) images.push_back(cover.lift(v));
  } else {
    images = steps[static_cast<std::size_t>(i)].vertex_images();
    for (int k = i + 1; k < j; ++k) {
      for (auto& p : images) p = steps[static_cast<std::size_t>(k)].lift(p);
    }
  }
  return GraphMap(from, snapshots[static_cast<std::size_t>(j)], std::move(images));
}

FoldingPath fold_from(const GraphMap& f) {
  require_slope_one(f);
  require_two_gates(gates(f, std::vector<bool>(static_cast<std::size_t>(f.source().num_edges()), true)));
  FoldingPath path;
  path.times.push_back(0);
  path.snapshots.push_back(f.source());
  path.residuals.push_back(f);
  // Each fold lowers the volume; this only guards against a broken invariant.
  constexpr int kMaxEvents = 100000;
  while (true) {
    auto step = fold_step(path.residuals.back());
    if (!step) break;
    if (path.size() > kMaxEvents) throw InternalError("folding path does not terminate");
    path.times.push_back(path.times.back() + step->dt);
    path.snapshots.push_back(step->residual.source());
    path.steps.push_back(std::move(step->fold));
    path.residuals.push_back(std::move(step->residual));
  }
  if (!find_marked_isometry(clean(path.snapshots.back()), clean(f.target()))) {
    throw InternalError("folding ended away from the target");
  }
  return path;
}

FoldingPath folding_path(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  auto f = optimal_map(g, h);
  auto tension = tension_graph(f);
  if (!std::all_of(tension.begin(), tension.end(), [](bool b) { return b; })) {
    throw Error("optimal map has a proper tension graph");
  }
  require_two_gates(gates(f, tension));
  return fold_from(GraphMap(scale(g, f.sigma()), h, f.vertex_images()));
}

StandardGeodesic standard_geodesic(const MarkedMetricGraph& g0, const MarkedMetricGraph& h0) {
  const auto g = normalize(g0);
  const auto h = normalize(h0);
  auto f = optimal_map(g, h);
  State s = start(f);
  for (int e = 0; e < g.num_edges(); ++e) s.g.lengths[static_cast<std::size_t>(e)] = f.image_length(e);
  StandardGeodesic out;
  out.start_lengths = g.lengths;
  collapse_zero_edges(s, &out.collapsed);

  // Slide vertices whose directions all share a germ until every vertex has two gates.
  while (true) {
    GraphMap m(s.g, h, s.images);
    auto tt = gates(m, std::vector<bool>(static_cast<std::size_t>(s.g.num_edges()), true));
    int v = 0;
    while (v < s.g.num_vertices && tt.num_gates(v) != 1) ++v;
    if (v == s.g.num_vertices) break;
    const auto star = s.g.stars()[static_cast<std::size_t>(v)];
    const TreePoint& p = s.images[static_cast<std::size_t>(v)];
    std::optional<Rational> delta;
    auto lower = [&](const Rational& x) {
      if (!delta || x < *delta) delta = x;
    };
    std::vector<int> ends(static_cast<std::size_t>(s.g.num_edges()), 0);
    for (std::size_t i = 0; i < star.size(); ++i) {
      ++ends[static_cast<std::size_t>(edge_of(star[i]))];
      for (std::size_t j = i + 1; j < star.size(); ++j) lower(m.cover().gromov(p, m.far_end(star[i]), m.far_end(star[j])));
    }
    for (int e = 0; e < s.g.num_edges(); ++e) {
      if (ends[static_cast<std::size_t>(e)] > 0) lower(s.g.lengths[static_cast<std::size_t>(e)] / ends[static_cast<std::size_t>(e)]);
    }
    s.images[static_cast<std::size_t>(v)] = m.cover().along(p, m.far_end(star[0]), *delta);
    GraphMap moved(s.g, h, s.images);
    for (int e = 0; e < s.g.num_edges(); ++e) s.g.lengths[static_cast<std::size_t>(e)] = moved.image_length(e);
    collapse_zero_edges(s, &out.collapsed);
  }
  std::sort(out.collapsed.begin(), out.collapsed.end());

  const Rational total = volume(s.g);
  out.end_lengths.assign(static_cast<std::size_t>(g.num_edges()), Rational(0));
  for (int e = 0; e < s.g.num_edges(); ++e) {
    out.end_lengths[static_cast<std::size_t>(s.origin[static_cast<std::size_t>(e)])] = s.g.lengths[static_cast<std::size_t>(e)] / total;
  }
  out.middle = normalize(s.g);
  out.folding = fold_from(GraphMap(s.g, h, s.images));
  return out;
}

namespace {

Rational longest_legal_segment(const MarkedMetricGraph& g, const TrainTrackStructure& tt, const SubgroupCoreGraph& core) {
  const int n = core.num_vertices();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(core.star(v).size());
  Rational best = 0;
  auto scan = [&](const std::vector<Dir>& path, bool cyclic) {
    if (path.empty()) return;
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!tt.legal_turn(reverse(path[i]), path[i + 1])) cuts.push_back(i + 1);
    }
    if (cyclic && !tt.legal_turn(reverse(path.back()), path.front())) cuts.push_back(0);
    if (cyclic && cuts.empty()) {
      best = std::max(best, path_length(g, path));
      return;
    }
    // Runs between cuts; cyclic runs wrap around.
    std::vector<std::size_t> starts = cuts;
    if (!cyclic) starts.insert(starts.begin(), 0);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (std::size_t k = 0; k < starts.size(); ++k) {
      std::size_t from = starts[k];
      std::size_t to = k + 1 < starts.size() ? starts[k + 1] : (cyclic ? starts[0] + path.size() : path.size());
      Rational len = 0;
      for (std::size_t i = from; i < to; ++i) len += g.length(path[i % path.size()]);
      best = std::max(best, len);
    }
  };
  bool branched = false;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 2) continue;
    branched = true;
    for (const auto& [label, next] : core.star(v)) {
      // Each topological edge is walked from both ends; legality is symmetric, so that is harmless.
      std::vector<Dir> path{dir_of_label(label)};
      int prev_label = -label;
      int at = next;
      while (degree[static_cast<std::size_t>(at)] == 2) {
        Letter out = 0;
        for (const auto& [l, w] : core.star(at)) {
          if (l != prev_label) out = l;
        }
        path.push_back(dir_of_label(out));
        prev_label = -out;
        at = core.star(at).at(out);
      }
      scan(path, false);
    }
  }
  if (!branched && n > 0) {
    // A circle.
    std::vector<Dir> path;
    int at = 0;
    int prev_label = 0;
    do {
      Letter out = 0;
      for (const auto& [l, w] : core.star(at)) {
        if (l != prev_label && out == 0) out = l;
      }
      path.push_back(dir_of_label(out));
      prev_label = -out;
      at = core.star(at).at(out);
    } while (at != 0);
    scan(path, true);
  }
  return best;
}

}  // namespace

std::vector<PathRow> path_statistics(const FoldingPath& path, const PathProbes& probes) {
  std::vector<PathRow> rows;
  for (int i = 0; i < path.size(); ++i) {
    const auto& g = path.snapshots[static_cast<std::size_t>(i)];
    const auto& r = path.residuals[static_cast<std::size_t>(i)];
    auto tt = gates(r, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), true));
    PathRow row;
    row.time = path.times[static_cast<std::size_t>(i)];
    row.volume = volume(g);
    for (const auto& w : probes.loops) {
      auto rep = loop_representative(g, w);
      row.loop_lengths.push_back(path_length(g, rep.dirs));
      row.illegal_turns.push_back(illegal_turn_count(tt, rep));
    }
    for (const auto& h : probes.subgroups) {
      auto core = subgroup_core_in_graph(g, h);
      row.subgroup_volumes.push_back(core.volume);
      row.longest_legal_segment.push_back(longest_legal_segment(g, tt, core.core) / row.volume);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace outer
