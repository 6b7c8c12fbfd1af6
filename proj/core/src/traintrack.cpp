#include "outer/traintrack.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "outer/error.hpp"

namespace outer {

TrainTrackStructure TrainTrackStructure::of(const MarkedMetricGraph& g, std::vector<int> gate) {
  if (static_cast<int>(gate.size()) != 2 * g.num_edges()) throw Error("one gate index per direction expected");
  for (int e = 0; e < g.num_edges(); ++e) {
    if ((gate[static_cast<std::size_t>(2 * e)] < 0) != (gate[static_cast<std::size_t>(2 * e + 1)] < 0)) {
      throw Error("edge only half inside the support");
    }
  }
  return {g.num_vertices, g.edges, std::move(gate)};
}

int TrainTrackStructure::num_gates(int v) const {
  std::set<int> seen;
  for (Dir d = 0; d < 2 * num_edges(); ++d) {
    if (tail(d) == v && gate[static_cast<std::size_t>(d)] >= 0) seen.insert(gate[static_cast<std::size_t>(d)]);
  }
  return static_cast<int>(seen.size());
}

std::string to_string(Recurrence r) {
  switch (r) {
    case Recurrence::birecurrent:
      return "birecurrent";
    case Recurrence::recurrent:
      return "recurrent";
    case Recurrence::reducible:
      return "reducible";
    case Recurrence::one_orientation:
      return "one-orientation";
  }
  return "?";
}

std::vector<Turn> illegal_turns(const TrainTrackStructure& tt, const EdgePath& path) {
  const auto& p = path.dirs;
  for (Dir d : p) {
    if (d < 0 || edge_of(d) >= tt.num_edges() || !tt.supported(edge_of(d))) throw Error("path leaves the support");
  }
  std::vector<Turn> out;
  const std::size_t n = p.size();
  const std::size_t turns = path.cyclic ? n : (n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i < turns; ++i) {
    Dir in = p[i];
    Dir next = p[(i + 1) % n];
    if (tt.head(in) != tt.tail(next)) throw Error("path is not connected");
    if (!tt.legal_turn(reverse(in), next)) out.push_back({tt.head(in), reverse(in), next});
  }
  return out;
}

int illegal_turn_count(const TrainTrackStructure& tt, const EdgePath& path) {
  return static_cast<int>(illegal_turns(tt, path).size());
}

bool is_legal(const TrainTrackStructure& tt, const EdgePath& path) { return illegal_turn_count(tt, path) == 0; }

DirectionDigraph direction_digraph(const TrainTrackStructure& tt) {
  const int n = 2 * tt.num_edges();
  DirectionDigraph dg;
  dg.arcs.resize(static_cast<std::size_t>(n));
  for (Dir d = 0; d < n; ++d) {
    if (tt.gate[static_cast<std::size_t>(d)] < 0) continue;
    for (Dir x = 0; x < n; ++x) {
      if (tt.gate[static_cast<std::size_t>(x)] < 0 || tt.tail(x) != tt.head(d)) continue;
      if (tt.legal_turn(reverse(d), x)) dg.arcs[static_cast<std::size_t>(d)].push_back(x);
    }
  }
  return dg;
}

namespace {

// Tarjan's algorithm; component ids in reverse topological order.
std::vector<int> components(const DirectionDigraph& dg, const std::vector<bool>& active, int& count) {
  const int n = dg.num_nodes();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next = 0;
  count = 0;
  std::function<void(int)> visit = [&](int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int w : dg.arcs[static_cast<std::size_t>(v)]) {
      if (index[static_cast<std::size_t>(w)] < 0) {
        visit(w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (active[static_cast<std::size_t>(v)] && index[static_cast<std::size_t>(v)] < 0) visit(v);
  }
  return comp;
}

// Shortest arc path from a to b in the digraph (both included), restricted to one component.
std::vector<Dir> arc_path(const DirectionDigraph& dg, const std::vector<int>& comp, int c, Dir a, Dir b) {
  std::vector<Dir> parent(static_cast<std::size_t>(dg.num_nodes()), -2);
  std::deque<Dir> queue{a};
  parent[static_cast<std::size_t>(a)] = -1;
  while (!queue.empty()) {
    Dir x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (Dir y : dg.arcs[static_cast<std::size_t>(x)]) {
      if (comp[static_cast<std::size_t>(y)] != c || parent[static_cast<std::size_t>(y)] != -2) continue;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (parent[static_cast<std::size_t>(b)] == -2) throw InternalError("component is not strongly connected");
  std::vector<Dir> out;
  for (Dir x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

// Closed legal walk through every node of component c.
EdgePath closed_walk(const DirectionDigraph& dg, const std::vector<int>& comp, int c) {
  std::vector<Dir> nodes;
  for (Dir d = 0; d < dg.num_nodes(); ++d) {
    if (comp[static_cast<std::size_t>(d)] == c) nodes.push_back(d);
  }
  std::vector<Dir> walk{nodes.front()};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Dir from = walk.back();
    Dir to = nodes[(i + 1) % nodes.size()];
    if (i + 1 == nodes.size()) {
      // Close up: any arc path from the last node back to the first, at least one step long.
      std::vector<Dir> best;
      for (Dir y : dg.arcs[static_cast<std::size_t>(from)]) {
        if (comp[static_cast<std::size_t>(y)] != c) continue;
        auto p = arc_path(dg, comp, c, y, to);
        if (best.empty() || p.size() < best.size()) best = p;
      }
      walk.insert(walk.end(), best.begin(), best.end() - 1);
      break;
    }
    if (from == to) continue;
    auto p = arc_path(dg, comp, c, from, to);
    walk.insert(walk.end(), p.begin() + 1, p.end());
  }
  return {walk, true};
}

}  // namespace

RecurrenceReport classify_recurrence(const TrainTrackStructure& tt) {
  const int ne = tt.num_edges();
  auto dg = direction_digraph(tt);
  std::vector<bool> active(static_cast<std::size_t>(2 * ne), false);
  std::vector<int> support;
  for (int e = 0; e < ne; ++e) {
    if (!tt.supported(e)) continue;
    support.push_back(e);
    active[static_cast<std::size_t>(2 * e)] = active[static_cast<std::size_t>(2 * e + 1)] = true;
  }
  if (support.empty()) throw Error("empty train track structure");
  int count = 0;
  auto comp = components(dg, active, count);
  // A component carries a legal loop only if it contains an arc.
  auto nontrivial = [&](int c) {
    for (Dir d = 0; d < 2 * ne; ++d) {
      if (comp[static_cast<std::size_t>(d)] != c) continue;
      for (Dir y : dg.arcs[static_cast<std::size_t>(d)]) {
        if (comp[static_cast<std::size_t>(y)] == c) return true;
      }
    }
    return false;
  };
  auto covers = [&](int c, bool both) {
    for (int e : support) {
      bool f = comp[static_cast<std::size_t>(2 * e)] == c;
      bool r = comp[static_cast<std::size_t>(2 * e + 1)] == c;
      if (both ? !(f && r) : !(f || r)) return false;
    }
    return true;
  };
  for (int c = 0; c < count; ++c) {
    if (nontrivial(c) && covers(c, true)) return {Recurrence::birecurrent, support, closed_walk(dg, comp, c)};
  }
  for (int c = 0; c < count; ++c) {
    if (nontrivial(c) && covers(c, false)) return {Recurrence::recurrent, support, closed_walk(dg, comp, c)};
  }
  // Terminal classes: no arc leaves them. Pick the one with the least edge set.
  std::vector<bool> terminal(static_cast<std::size_t>(count), true);
  for (Dir d = 0; d < 2 * ne; ++d) {
    if (!active[static_cast<std::size_t>(d)]) continue;
    for (Dir y : dg.arcs[static_cast<std::size_t>(d)]) {
      if (comp[static_cast<std::size_t>(y)] != comp[static_cast<std::size_t>(d)]) terminal[static_cast<std::size_t>(comp[static_cast<std::size_t>(d)])] = false;
    }
  }
  std::optional<std::vector<int>> best;
  bool best_both = false;
  for (int c = 0; c < count; ++c) {
    if (!terminal[static_cast<std::size_t>(c)]) continue;
    std::vector<int> edges;
    bool both = false;
    for (int e : support) {
      bool f = comp[static_cast<std::size_t>(2 * e)] == c;
      bool r = comp[static_cast<std::size_t>(2 * e + 1)] == c;
      if (f || r) edges.push_back(e);
      if (f && r) both = true;
    }
    if (!best || edges < *best) {
      best = edges;
      best_both = both;
    }
  }
  return {best_both ? Recurrence::reducible : Recurrence::one_orientation, *best, std::nullopt};
}

std::optional<EdgePath> find_spanning_legal_loop(const TrainTrackStructure& tt) {
  auto r = classify_recurrence(tt);
  return r.certificate;
}

}  // namespace outer
