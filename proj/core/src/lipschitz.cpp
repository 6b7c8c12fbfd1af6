#include "outer/lipschitz.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "outer/error.hpp"
#include "outer/lp.hpp"

namespace outer {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::circle:
      return "circle";
    case Shape::figure_eight:
      return "figure-eight";
    case Shape::barbell:
      return "barbell";
  }
  return "?";
}

namespace {

struct Circle {
  std::vector<Dir> dirs;
  std::uint64_t edges = 0;
  std::uint64_t vertices = 0;
};

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<Circle> embedded_circles(const MarkedMetricGraph& g) {
  auto stars = g.stars();
  std::vector<Circle> out;
  std::set<std::uint64_t> seen;
  std::vector<Dir> path;
  std::function<void(int, int, std::uint64_t, std::uint64_t)> dfs = [&](int start, int at, std::uint64_t used,
                                                                         std::uint64_t visited) {
    for (Dir d : stars[static_cast<std::size_t>(at)]) {
      int e = edge_of(d);
      if (used & bit(e)) continue;
      int w = g.head(d);
      if (w == start) {
        path.push_back(d);
        if (seen.insert(used | bit(e)).second) out.push_back({path, used | bit(e), visited});
        path.pop_back();
        continue;
      }
      if (w < start || (visited & bit(w))) continue;
      path.push_back(d);
      dfs(start, w, used | bit(e), visited | bit(w));
      path.pop_back();
    }
  };
  for (int s = 0; s < g.num_vertices; ++s) dfs(s, s, 0, bit(s));
  return out;
}

std::vector<Dir> rotate_to(const MarkedMetricGraph& g, const std::vector<Dir>& loop, int v) {
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (g.tail(loop[i]) == v) {
      std::vector<Dir> out(loop.begin() + static_cast<std::ptrdiff_t>(i), loop.end());
      out.insert(out.end(), loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
  }
  throw InternalError("loop does not pass through the vertex");
}

std::vector<Dir> reversed(const std::vector<Dir>& p) {
  std::vector<Dir> out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reverse(*it));
  return out;
}

std::vector<Dir> join(std::initializer_list<std::vector<Dir>> parts) {
  std::vector<Dir> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<Candidate> candidates(const MarkedMetricGraph& g) {
  if (g.num_vertices > 64 || g.num_edges() > 64) throw Error("graph too large for candidate enumeration");
  auto circles = embedded_circles(g);
  std::vector<Candidate> out;
  for (const auto& c : circles) out.push_back({{c.dirs, true}, Shape::circle});
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const auto& a = circles[i];
      const auto& b = circles[j];
      if (a.edges & b.edges) continue;
      std::uint64_t common = a.vertices & b.vertices;
      if (common == 0 || (common & (common - 1)) != 0) continue;
      int v = __builtin_ctzll(common);
      auto ra = rotate_to(g, a.dirs, v);
      auto rb = rotate_to(g, b.dirs, v);
      out.push_back({{join({ra, rb}), true}, Shape::figure_eight});
      out.push_back({{join({ra, reversed(rb)}), true}, Shape::figure_eight});
    }
  }
  auto stars = g.stars();
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const auto& a = circles[i];
      const auto& b = circles[j];
      if (a.vertices & b.vertices) continue;
      // Embedded arcs from a to b whose interiors avoid both circles.
      std::vector<Dir> arc;
      std::function<void(int, std::uint64_t)> dfs = [&](int at, std::uint64_t visited) {
        for (Dir d : stars[static_cast<std::size_t>(at)]) {
          int w = g.head(d);
          if (b.vertices & bit(w)) {
            arc.push_back(d);
            int u = g.tail(arc.front());
            auto ra = rotate_to(g, a.dirs, u);
            auto rb = rotate_to(g, b.dirs, w);
            out.push_back({{join({ra, arc, rb, reversed(arc)}), true}, Shape::barbell});
            out.push_back({{join({ra, arc, reversed(rb), reversed(arc)}), true}, Shape::barbell});
            arc.pop_back();
            continue;
          }
          if ((a.vertices & bit(w)) || (visited & bit(w))) continue;
          arc.push_back(d);
          dfs(w, visited | bit(w));
          arc.pop_back();
        }
      };
      for (int u = 0; u < g.num_vertices; ++u) {
        if (a.vertices & bit(u)) dfs(u, 0);
      }
    }
  }
  return out;
}

Rational image_length(const MarkedMetricGraph& g, const MarkedMetricGraph& h, const std::vector<Dir>& loop) {
  return translation_length(h, path_word(g, loop));
}

Stretch stretch_factor(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  if (g.rank != h.rank) throw Error("stretch factor between graphs of different rank");
  auto cands = candidates(g);
  if (cands.empty()) throw Error("graph has no embedded circle");
  std::optional<Stretch> best;
  for (auto& c : cands) {
    Rational ratio = image_length(g, h, c.path.dirs) / path_length(g, c.path.dirs);
    if (!best || ratio > best->lambda) best = Stretch{ratio, std::move(c)};
  }
  return *best;
}

Rational distance(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  return stretch_factor(normalize(g), normalize(h)).lambda;
}

GraphMap::GraphMap(MarkedMetricGraph source, MarkedMetricGraph target, std::vector<TreePoint> vertex_images)
    : source_(std::move(source)), cover_(std::move(target)), images_(std::move(vertex_images)) {
  if (source_.rank != cover_.graph().rank) throw Error("map between graphs of different rank");
  if (static_cast<int>(images_.size()) != source_.num_vertices) throw Error("one vertex image per source vertex expected");
}

TreePoint GraphMap::far_end(Dir d) const {
  return cover_.act(source_.label(d), images_[static_cast<std::size_t>(source_.head(d))]);
}

std::vector<Piece> GraphMap::image(Dir d) const {
  return cover_.geodesic(images_[static_cast<std::size_t>(source_.tail(d))], far_end(d));
}

Rational GraphMap::image_length(int e) const {
  return cover_.distance(images_[static_cast<std::size_t>(source_.edges[static_cast<std::size_t>(e)].from)],
                         far_end(2 * e));
}

Rational GraphMap::slope(int e) const { return image_length(e) / source_.lengths[static_cast<std::size_t>(e)]; }

Rational GraphMap::sigma() const {
  Rational s = 0;
  for (int e = 0; e < source_.num_edges(); ++e) s = std::max(s, slope(e));
  return s;
}

TreePoint GraphMap::lift(const TreePoint& p) const {
  Word g;
  int x = source_.basepoint;
  for (Dir d : p.path) {
    g = g * source_.label(d);
    x = source_.head(d);
  }
  TreePoint a = cover_.act(g, images_[static_cast<std::size_t>(x)]);
  if (p.is_vertex()) return a;
  TreePoint b = cover_.act(g * source_.label(p.partial), images_[static_cast<std::size_t>(source_.head(p.partial))]);
  return cover_.along(a, b, p.offset * cover_.distance(a, b) / source_.length(p.partial));
}

Dir GraphMap::germ(Dir d) const {
  auto pieces = image(d);
  return pieces.empty() ? -1 : pieces.front().dir;
}

GraphMap initial_map(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  Cover cover(h);
  auto stars = g.stars();
  std::vector<std::optional<Word>> word(static_cast<std::size_t>(g.num_vertices));
  word[static_cast<std::size_t>(g.basepoint)] = Word();
  std::deque<int> queue{g.basepoint};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      int w = g.head(d);
      if (word[static_cast<std::size_t>(w)]) continue;
      word[static_cast<std::size_t>(w)] = *word[static_cast<std::size_t>(v)] * g.label(d);
      queue.push_back(w);
    }
  }
  std::vector<TreePoint> images;
  for (const auto& w : word) {
    if (!w) throw Error("source graph is disconnected");
    images.push_back(cover.act(w->inverse(), cover.root()));
  }
  return GraphMap(g, h, std::move(images));
}

std::vector<bool> tension_graph(const GraphMap& f) {
  const auto& g = f.source();
  std::vector<Rational> slopes;
  for (int e = 0; e < g.num_edges(); ++e) slopes.push_back(f.slope(e));
  Rational sigma = *std::max_element(slopes.begin(), slopes.end());
  std::vector<bool> out;
  for (const auto& s : slopes) out.push_back(s == sigma);
  return out;
}

TrainTrackStructure gates(const GraphMap& f, const std::vector<bool>& restrict) {
  const auto& g = f.source();
  if (static_cast<int>(restrict.size()) != g.num_edges()) throw Error("restriction mask has the wrong size");
  std::vector<int> gate(static_cast<std::size_t>(2 * g.num_edges()), -1);
  auto stars = g.stars();
  for (int v = 0; v < g.num_vertices; ++v) {
    std::map<Dir, int> index;
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      if (!restrict[static_cast<std::size_t>(edge_of(d))]) continue;
      Dir germ = f.germ(d);
      if (germ < 0) throw Error("collapsed edge in the restriction");
      auto it = index.emplace(germ, static_cast<int>(index.size())).first;
      gate[static_cast<std::size_t>(d)] = it->second;
    }
  }
  return TrainTrackStructure::of(g, std::move(gate));
}

namespace {

// One edge of the universal cover of the target, from vertex `a` along `dir`.
struct Cell {
  TreePoint a;
  Dir dir;
  Rational length;
};

TreePoint cell_point(const Cell& c, const Rational& s) {
  if (s == 0) return c.a;
  const bool back = !c.a.path.empty() && c.a.path.back() == reverse(c.dir);
  TreePoint p;
  if (back) {
    p.path.assign(c.a.path.begin(), c.a.path.end() - 1);
    if (s == c.length) return p;
    p.partial = c.a.path.back();
    p.offset = c.length - s;
    return p;
  }
  p.path = c.a.path;
  if (s == c.length) {
    p.path.push_back(c.dir);
    return p;
  }
  p.partial = c.dir;
  p.offset = s;
  return p;
}

// Cell containing p; `germ` picks the edge when p is a vertex. Returns the cell and p's parameter.
std::pair<Cell, Rational> cell_at(const Cover& cover, const TreePoint& p, Dir germ) {
  const auto& h = cover.graph();
  if (p.is_vertex()) {
    if (germ < 0) {
      int v = p.path.empty() ? h.basepoint : h.head(p.path.back());
      germ = h.stars()[static_cast<std::size_t>(v)].front();
    }
    return {Cell{p, germ, h.length(germ)}, 0};
  }
  TreePoint a;
  a.path = p.path;
  return {Cell{a, p.partial, h.length(p.partial)}, p.offset};
}

// d(x(s1), y(s2)) for x in cell c1 and y in the translate g.c2: k1 s1 + k2 s2 + c, or its absolute value.
struct DistanceForm {
  bool absolute = false;
  Rational k1, k2, c;
};

DistanceForm distance_form(const Cover& cover, const Cell& c1, const Word& g, const Cell& c2) {
  TreePoint a1 = c1.a;
  TreePoint b1 = cell_point(c1, c1.length);
  TreePoint c = cover.act(g, c2.a);
  TreePoint d = cover.act(g, cell_point(c2, c2.length));
  DistanceForm f;
  if (a1 == c && b1 == d) {
    f.absolute = true;
    f.k1 = 1;
    f.k2 = -1;
    f.c = 0;
    return f;
  }
  if (a1 == d && b1 == c) {
    f.absolute = true;
    f.k1 = 1;
    f.k2 = 1;
    f.c = -c1.length;
    return f;
  }
  const bool near_a1 = cover.distance(a1, c) < cover.distance(b1, c);
  const bool near_c = cover.distance(c, a1) < cover.distance(d, a1);
  f.c = cover.distance(near_a1 ? a1 : b1, near_c ? c : d);
  if (near_a1) {
    f.k1 = 1;
  } else {
    f.k1 = -1;
    f.c += c1.length;
  }
  if (near_c) {
    f.k2 = 1;
  } else {
    f.k2 = -1;
    f.c += c2.length;
  }
  return f;
}

struct Pruning {
  std::vector<std::pair<int, Dir>> order;
  std::vector<bool> remaining;
};

// Repeatedly removes vertices whose remaining tension directions form a single gate.
Pruning prune(const GraphMap& f, std::vector<bool> tension) {
  const auto& g = f.source();
  auto stars = g.stars();
  std::vector<std::vector<Dir>> germs(static_cast<std::size_t>(g.num_vertices));
  std::vector<Dir> germ_of(static_cast<std::size_t>(2 * g.num_edges()), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!tension[static_cast<std::size_t>(e)]) continue;
    germ_of[static_cast<std::size_t>(2 * e)] = f.germ(2 * e);
    germ_of[static_cast<std::size_t>(2 * e + 1)] = f.germ(2 * e + 1);
  }
  Pruning p;
  std::vector<bool> done(static_cast<std::size_t>(g.num_vertices), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      std::set<Dir> seen;
      for (Dir d : stars[static_cast<std::size_t>(v)]) {
        if (tension[static_cast<std::size_t>(edge_of(d))]) seen.insert(germ_of[static_cast<std::size_t>(d)]);
      }
      if (seen.size() != 1) continue;
      done[static_cast<std::size_t>(v)] = true;
      p.order.emplace_back(v, *seen.begin());
      for (Dir d : stars[static_cast<std::size_t>(v)]) tension[static_cast<std::size_t>(edge_of(d))] = false;
      changed = true;
    }
  }
  p.remaining = std::move(tension);
  return p;
}

// Adds rows for d(x_v, u x_w) <= rhs_t * t + rhs_c - m_coef * m. Variables not in `var` are fixed at `fixed`.
void add_edge_rows(LinearProgram& lp, const DistanceForm& form, int var1, const Rational& fixed1, int var2,
                   const Rational& fixed2, int t_var, const Rational& t_coef, const Rational& rhs, int m_var) {
  for (int sign : {1, -1}) {
    if (sign < 0 && !form.absolute) break;
    std::vector<Rational> row(static_cast<std::size_t>(lp.num_variables()), 0);
    Rational constant = sign * form.c;
    if (var1 >= 0) {
      row[static_cast<std::size_t>(var1)] += sign * form.k1;
    } else {
      constant += sign * form.k1 * fixed1;
    }
    if (var2 >= 0) {
      row[static_cast<std::size_t>(var2)] += sign * form.k2;
    } else {
      constant += sign * form.k2 * fixed2;
    }
    if (t_var >= 0) row[static_cast<std::size_t>(t_var)] -= t_coef;
    if (m_var >= 0) row[static_cast<std::size_t>(m_var)] += 1;
    lp.add_row(std::move(row), rhs - constant);
  }
}

// Lowest sigma over the product of cells, every vertex free in its cell.
std::vector<TreePoint> descend(const GraphMap& f, const std::vector<Cell>& cells) {
  const auto& g = f.source();
  const int n = g.num_vertices;
  LinearProgram lp;
  lp.c.assign(static_cast<std::size_t>(n + 1), 0);
  lp.c[static_cast<std::size_t>(n)] = -1;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges[static_cast<std::size_t>(e)];
    auto form = distance_form(f.cover(), cells[static_cast<std::size_t>(edge.from)], g.labels[static_cast<std::size_t>(e)],
                              cells[static_cast<std::size_t>(edge.to)]);
    add_edge_rows(lp, form, edge.from, 0, edge.to, 0, n, g.lengths[static_cast<std::size_t>(e)], 0, -1);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> row(static_cast<std::size_t>(n + 1), 0);
    row[static_cast<std::size_t>(v)] = 1;
    lp.add_row(std::move(row), cells[static_cast<std::size_t>(v)].length);
  }
  auto r = solve(lp);
  if (r.status != LpStatus::optimal) throw InternalError("cell program for the optimal map is not solvable");
  std::vector<TreePoint> out;
  for (int v = 0; v < n; ++v) out.push_back(cell_point(cells[static_cast<std::size_t>(v)], r.x[static_cast<std::size_t>(v)]));
  return out;
}

}  // namespace

GraphMap tighten_map(const GraphMap& input) {
  GraphMap f = input;
  const auto& g = f.source();
  const Rational sigma = f.sigma();
  for (int round = 0; round < 2 * g.num_vertices + 2; ++round) {
    auto pruning = prune(f, tension_graph(f));
    if (pruning.order.empty()) return f;
    bool any_left = std::any_of(pruning.remaining.begin(), pruning.remaining.end(), [](bool b) { return b; });
    if (!any_left) throw Error("map is not optimal: no legal structure survives in the tension graph");
    // Pruned vertices slide in their gate directions; the rest stay put.
    std::vector<int> var(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<Cell> cells;
    std::vector<Rational> params;
    for (int v = 0; v < g.num_vertices; ++v) {
      auto [cell, s] = cell_at(f.cover(), f.vertex_images()[static_cast<std::size_t>(v)], -1);
      cells.push_back(cell);
      params.push_back(s);
    }
    int k = 0;
    for (auto [v, germ] : pruning.order) {
      auto [cell, s] = cell_at(f.cover(), f.vertex_images()[static_cast<std::size_t>(v)], germ);
      cells[static_cast<std::size_t>(v)] = cell;
      params[static_cast<std::size_t>(v)] = s;
      var[static_cast<std::size_t>(v)] = k++;
    }
    const int m_var = k;
    LinearProgram lp;
    lp.c.assign(static_cast<std::size_t>(k + 1), 0);
    lp.c[static_cast<std::size_t>(m_var)] = 1;
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto& edge = g.edges[static_cast<std::size_t>(e)];
      int v1 = var[static_cast<std::size_t>(edge.from)];
      int v2 = var[static_cast<std::size_t>(edge.to)];
      if (v1 < 0 && v2 < 0) continue;
      auto form = distance_form(f.cover(), cells[static_cast<std::size_t>(edge.from)], g.labels[static_cast<std::size_t>(e)],
                                cells[static_cast<std::size_t>(edge.to)]);
      add_edge_rows(lp, form, v1, params[static_cast<std::size_t>(edge.from)], v2, params[static_cast<std::size_t>(edge.to)], -1,
                    0, sigma * g.lengths[static_cast<std::size_t>(e)], m_var);
    }
    for (auto [v, germ] : pruning.order) {
      std::vector<Rational> row(static_cast<std::size_t>(k + 1), 0);
      row[static_cast<std::size_t>(var[static_cast<std::size_t>(v)])] = 1;
      lp.add_row(std::move(row), cells[static_cast<std::size_t>(v)].length);
    }
    auto r = solve(lp);
    if (r.status != LpStatus::optimal || r.value <= 0) throw InternalError("tightening found no strict improvement");
    auto images = f.vertex_images();
    for (auto [v, germ] : pruning.order) {
      images[static_cast<std::size_t>(v)] =
          cell_point(cells[static_cast<std::size_t>(v)], r.x[static_cast<std::size_t>(var[static_cast<std::size_t>(v)])]);
    }
    f.set_vertex_images(std::move(images));
    if (f.sigma() != sigma) throw InternalError("tightening changed the maximal slope");
  }
  throw InternalError("tightening did not settle");
}

GraphMap optimal_map(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  require_valid(g);
  require_valid(h);
  const Rational lambda = stretch_factor(g, h).lambda;
  GraphMap f = initial_map(g, h);
  Rational sigma = f.sigma();
  for (int step = 0; sigma != lambda; ++step) {
    if (sigma < lambda) throw InternalError("map stretches less than the stretch factor");
    if (step > 10000) throw InternalError("optimal map descent did not converge");
    auto pruning = prune(f, tension_graph(f));
    if (std::any_of(pruning.remaining.begin(), pruning.remaining.end(), [](bool b) { return b; })) {
      throw InternalError("legal loop in the tension graph above the stretch factor");
    }
    std::map<int, Dir> direction(pruning.order.begin(), pruning.order.end());
    std::vector<Cell> cells;
    for (int v = 0; v < g.num_vertices; ++v) {
      auto it = direction.find(v);
      cells.push_back(cell_at(f.cover(), f.vertex_images()[static_cast<std::size_t>(v)], it == direction.end() ? -1 : it->second).first);
    }
    f.set_vertex_images(descend(f, cells));
    Rational next = f.sigma();
    if (next >= sigma) throw InternalError("optimal map descent stalled");
    sigma = next;
  }
  return tighten_map(f);
}

SimplexOptimum optimize_in_simplex(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  require_valid(g);
  require_valid(h);
  if (g.rank != h.rank) throw Error("graphs of different rank");
  const int ne = g.num_edges();
  auto cands = candidates(g);
  std::vector<std::vector<Rational>> counts;
  std::vector<Rational> target;
  for (const auto& c : cands) {
    std::vector<Rational> n(static_cast<std::size_t>(ne), 0);
    for (Dir d : c.path.dirs) n[static_cast<std::size_t>(edge_of(d))] += 1;
    counts.push_back(std::move(n));
    target.push_back(image_length(g, h, c.path.dirs));
  }
  auto simplex_rows = [&](LinearProgram& lp) {
    std::vector<Rational> sum(static_cast<std::size_t>(lp.num_variables()), 0);
    for (int e = 0; e < ne; ++e) sum[static_cast<std::size_t>(e)] = 1;
    lp.add_row(sum, 1);
    for (auto& x : sum) x = -x;
    lp.add_row(sum, -1);
  };
  // maximize t with l_x(a) >= t l_h(a) for every candidate a.
  LinearProgram first;
  first.c.assign(static_cast<std::size_t>(ne + 1), 0);
  first.c[static_cast<std::size_t>(ne)] = 1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(ne + 1), 0);
    for (int e = 0; e < ne; ++e) row[static_cast<std::size_t>(e)] = -counts[i][static_cast<std::size_t>(e)];
    row[static_cast<std::size_t>(ne)] = target[i];
    first.add_row(std::move(row), 0);
  }
  simplex_rows(first);
  auto r1 = solve(first);
  if (r1.status != LpStatus::optimal || r1.value <= 0) throw InternalError("simplex program has no positive optimum");
  const Rational t = r1.value;
  // Among optima, maximize the smallest coordinate.
  LinearProgram second;
  second.c.assign(static_cast<std::size_t>(ne + 1), 0);
  second.c[static_cast<std::size_t>(ne)] = 1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(ne + 1), 0);
    for (int e = 0; e < ne; ++e) row[static_cast<std::size_t>(e)] = -counts[i][static_cast<std::size_t>(e)];
    second.add_row(std::move(row), -t * target[i]);
  }
  simplex_rows(second);
  for (int e = 0; e < ne; ++e) {
    std::vector<Rational> row(static_cast<std::size_t>(ne + 1), 0);
    row[static_cast<std::size_t>(e)] = -1;
    row[static_cast<std::size_t>(ne)] = 1;
    second.add_row(std::move(row), 0);
  }
  auto r2 = solve(second);
  if (r2.status != LpStatus::optimal) throw InternalError("second simplex program failed");
  SimplexOptimum out;
  out.lengths.assign(r2.x.begin(), r2.x.begin() + ne);
  out.lambda = 1 / t;
  out.boundary = r2.value == 0;
  return out;
}

}  // namespace outer
