#include "outer/marked_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "outer/error.hpp"

namespace outer {

std::vector<std::vector<Dir>> MarkedMetricGraph::stars() const {
  std::vector<std::vector<Dir>> out(static_cast<std::size_t>(num_vertices));
  for (int e = 0; e < num_edges(); ++e) {
    out[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].from)].push_back(2 * e);
    out[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].to)].push_back(2 * e + 1);
  }
  return out;
}

int MarkedMetricGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.from == v) + (e.to == v);
  return d;
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(problems.begin(), problems.end(), [&](const Diagnostic& d) { return d.code == code; });
}

std::vector<Dir> tighten(const std::vector<Dir>& path, bool cyclic) {
  std::deque<Dir> out;
  for (Dir d : path) {
    if (!out.empty() && out.back() == reverse(d)) {
      out.pop_back();
    } else {
      out.push_back(d);
    }
  }
  if (cyclic) {
    while (out.size() >= 2 && out.front() == reverse(out.back())) {
      out.pop_front();
      out.pop_back();
    }
  }
  return {out.begin(), out.end()};
}

Word path_word(const MarkedMetricGraph& g, const std::vector<Dir>& path) {
  std::vector<Letter> letters;
  for (Dir d : path) {
    Word w = g.label(d);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return Word::reduce(letters);
}

Rational path_length(const MarkedMetricGraph& g, const std::vector<Dir>& path) {
  Rational total = 0;
  for (Dir d : path) total += g.length(d);
  return total;
}

std::vector<Dir> word_path(const MarkedMetricGraph& g, const Word& w) {
  std::vector<Dir> out;
  for (Letter x : w.letters()) {
    const auto& loop = g.loops.at(static_cast<std::size_t>(std::abs(x) - 1));
    if (x > 0) {
      out.insert(out.end(), loop.begin(), loop.end());
    } else {
      for (auto it = loop.rbegin(); it != loop.rend(); ++it) out.push_back(reverse(*it));
    }
  }
  return out;
}

namespace {

bool connected(const MarkedMetricGraph& g) {
  if (g.num_vertices == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices), false);
  auto stars = g.stars();
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      int w = g.head(d);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Tree paths from the basepoint, by BFS over directions in increasing order.
struct SpanningTree {
  std::vector<std::vector<Dir>> path_to;
  std::vector<bool> tree_edge;
};

SpanningTree spanning_tree(const MarkedMetricGraph& g, int root) {
  SpanningTree t;
  t.path_to.assign(static_cast<std::size_t>(g.num_vertices), {});
  t.tree_edge.assign(static_cast<std::size_t>(g.num_edges()), false);
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices), false);
  auto stars = g.stars();
  std::deque<int> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      int w = g.head(d);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      t.tree_edge[static_cast<std::size_t>(edge_of(d))] = true;
      t.path_to[static_cast<std::size_t>(w)] = t.path_to[static_cast<std::size_t>(v)];
      t.path_to[static_cast<std::size_t>(w)].push_back(d);
      queue.push_back(w);
    }
  }
  return t;
}

std::vector<Dir> reversed_path(const std::vector<Dir>& p) {
  std::vector<Dir> out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reverse(*it));
  return out;
}

std::vector<Dir> concat(std::vector<Dir> a, const std::vector<Dir>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_closed_path_at(const MarkedMetricGraph& g, const std::vector<Dir>& p, int v) {
  if (p.empty()) return false;
  int at = v;
  for (Dir d : p) {
    if (d < 0 || edge_of(d) >= g.num_edges() || g.tail(d) != at) return false;
    at = g.head(d);
  }
  return at == v;
}

}  // namespace

ValidationReport validate(const MarkedMetricGraph& g) {
  ValidationReport r;
  auto add = [&](const std::string& code, const std::string& message) { r.problems.push_back({code, message}); };
  r.rank = g.num_edges() - g.num_vertices + 1;
  const auto ne = static_cast<std::size_t>(g.num_edges());
  if (g.num_vertices < 1 || g.lengths.size() != ne || g.labels.size() != ne ||
      static_cast<int>(g.loops.size()) != g.rank) {
    add("bad incidence", "array sizes do not match the edge, vertex or rank counts");
    return r;
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = g.edges[e];
    if (edge.from < 0 || edge.from >= g.num_vertices || edge.to < 0 || edge.to >= g.num_vertices) {
      add("bad incidence", "edge " + std::to_string(e + 1) + " has an endpoint outside the vertex set");
      return r;
    }
  }
  if (g.basepoint < 0 || g.basepoint >= g.num_vertices) {
    add("bad basepoint", "basepoint outside the vertex set");
    return r;
  }
  for (const auto& l : g.lengths) r.volume += l;
  for (std::size_t e = 0; e < ne; ++e) {
    if (g.lengths[e] <= 0) add("nonpositive length", "edge " + std::to_string(e + 1) + " has length " + to_string(g.lengths[e]));
  }
  if (!connected(g)) add("disconnected", "graph is not connected");
  if (r.rank != g.rank) {
    add("rank mismatch", "Euler characteristic gives rank " + std::to_string(r.rank) + ", declared " + std::to_string(g.rank));
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    int d = g.degree(v);
    if (d < 2 || (d == 2 && !g.subdivided)) {
      add("low degree", "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
  if (!r.ok()) return r;

  FreeGroup group(g.rank);
  for (const auto& w : g.labels) {
    if (w.max_generator() > g.rank) {
      add("marking mismatch", "edge label uses a letter outside the rank");
      return r;
    }
  }
  for (int i = 0; i < g.rank; ++i) {
    const auto& loop = g.loops[static_cast<std::size_t>(i)];
    if (!is_closed_path_at(g, loop, g.basepoint)) {
      add("marking mismatch", "loop for generator " + std::to_string(i + 1) + " is not a closed path at the basepoint");
      continue;
    }
    if (path_word(g, loop) != Word::letter(i + 1)) {
      add("marking mismatch", "loop for generator " + std::to_string(i + 1) + " reads " + group.format(path_word(g, loop)));
    }
  }
  if (!r.ok()) return r;
  auto tree = spanning_tree(g, g.basepoint);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.tree_edge[static_cast<std::size_t>(e)]) continue;
    const auto& edge = g.edges[static_cast<std::size_t>(e)];
    auto loop = concat(concat(tree.path_to[static_cast<std::size_t>(edge.from)], {2 * e}),
                       reversed_path(tree.path_to[static_cast<std::size_t>(edge.to)]));
    auto back = tighten(word_path(g, path_word(g, loop)));
    if (back != tighten(loop)) {
      add("marking mismatch", "edge " + std::to_string(e + 1) + " does not round-trip through the marking");
    }
  }
  return r;
}

void require_valid(const MarkedMetricGraph& g) {
  auto r = validate(g);
  if (r.ok()) return;
  std::string msg = "invalid marked graph:";
  for (const auto& p : r.problems) msg += " [" + p.code + "] " + p.message + ";";
  throw Error(msg);
}

EdgePath loop_representative(const MarkedMetricGraph& g, const CyclicWord& w) {
  if (w.trivial()) throw Error("trivial conjugacy class has no loop representative");
  return {tighten(word_path(g, w.word()), true), true};
}

Rational translation_length(const MarkedMetricGraph& g, const CyclicWord& w) {
  if (w.trivial()) return 0;
  return path_length(g, loop_representative(g, w).dirs);
}

Rational translation_length(const MarkedMetricGraph& g, const Word& w) { return translation_length(g, CyclicWord::of(w)); }

Rational volume(const MarkedMetricGraph& g) {
  Rational v = 0;
  for (const auto& l : g.lengths) v += l;
  return v;
}

MarkedMetricGraph scale(const MarkedMetricGraph& g, const Rational& factor) {
  MarkedMetricGraph h = g;
  for (auto& l : h.lengths) l *= factor;
  return h;
}

MarkedMetricGraph normalize(const MarkedMetricGraph& g) {
  Rational v = volume(g);
  if (v <= 0) throw Error("cannot normalize a graph of nonpositive volume");
  return scale(g, 1 / v);
}

MarkedMetricGraph with_lengths(const MarkedMetricGraph& g, const std::vector<Rational>& lengths) {
  if (lengths.size() != g.lengths.size()) throw Error("length vector has the wrong size");
  MarkedMetricGraph h = g;
  h.lengths = lengths;
  return h;
}

std::vector<std::vector<Dir>> topological_edges(const MarkedMetricGraph& g) {
  auto stars = g.stars();
  std::vector<std::vector<Dir>> chains;
  auto branch = [&](int v) { return stars[static_cast<std::size_t>(v)].size() != 2; };
  for (int v = 0; v < g.num_vertices; ++v) {
    if (!branch(v)) continue;
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      std::vector<Dir> chain{d};
      while (!branch(g.head(chain.back()))) {
        const auto& s = stars[static_cast<std::size_t>(g.head(chain.back()))];
        Dir next = s[0] == reverse(chain.back()) ? s[1] : s[0];
        chain.push_back(next);
      }
      if (chain.front() <= reverse(chain.back())) chains.push_back(std::move(chain));
    }
  }
  return chains;
}

std::vector<FactorHandle> subgraph_factors(const MarkedMetricGraph& g) {
  auto chains = topological_edges(g);
  const int m = static_cast<int>(chains.size());
  if (m > 24) throw Error("too many topological edges for subgraph enumeration");
  std::map<std::string, FactorHandle> found;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::map<int, int> degree;
    std::vector<int> members;
    for (int c = 0; c < m; ++c) {
      if (!(mask & (1u << c))) continue;
      members.push_back(c);
      ++degree[g.tail(chains[static_cast<std::size_t>(c)].front())];
      ++degree[g.head(chains[static_cast<std::size_t>(c)].back())];
    }
    bool core = std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second >= 2; });
    if (!core) continue;
    int rank = static_cast<int>(members.size()) - static_cast<int>(degree.size()) + 1;
    if (rank < 1 || rank >= g.rank) continue;
    // Spanning tree of the chosen chains.
    const int root = degree.begin()->first;
    std::map<int, std::vector<Dir>> path_to{{root, {}}};
    std::vector<bool> used(members.size(), false);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (used[k]) continue;
        const auto& chain = chains[static_cast<std::size_t>(members[k])];
        int a = g.tail(chain.front());
        int b = g.head(chain.back());
        if (path_to.count(a) && !path_to.count(b)) {
          path_to[b] = concat(path_to[a], chain);
          used[k] = grew = true;
        } else if (path_to.count(b) && !path_to.count(a)) {
          path_to[a] = concat(path_to[b], reversed_path(chain));
          used[k] = grew = true;
        }
      }
    }
    if (path_to.size() != degree.size()) continue;
    std::vector<Word> generators;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (used[k]) continue;
      const auto& chain = chains[static_cast<std::size_t>(members[k])];
      auto loop = concat(concat(path_to[g.tail(chain.front())], chain), reversed_path(path_to[g.head(chain.back())]));
      generators.push_back(path_word(g, loop));
    }
    auto handle = FactorHandle::from_generators(g.rank, generators);
    found.emplace(handle.code(), handle);
  }
  std::vector<FactorHandle> out;
  for (auto& [code, h] : found) out.push_back(std::move(h));
  return out;
}

Dir dir_of_label(Letter label) { return label > 0 ? 2 * (label - 1) : 2 * (-label - 1) + 1; }
Letter label_of_dir(Dir d) { return is_forward(d) ? edge_of(d) + 1 : -(edge_of(d) + 1); }

ImmersedCore subgroup_core_in_graph(const MarkedMetricGraph& g, const SubgroupCoreGraph& h) {
  if (h.trivial()) throw Error("trivial subgroup");
  std::vector<LabeledEdge> edges;
  int next = h.num_vertices();
  for (const auto& e : h.edges()) {
    std::vector<Dir> p = word_path(g, Word::letter(e.label));
    int prev = e.from;
    for (std::size_t k = 0; k < p.size(); ++k) {
      int to = (k + 1 == p.size()) ? e.to : next++;
      edges.push_back({prev, to, label_of_dir(p[k])});
      prev = to;
    }
  }
  auto folded = SubgroupCoreGraph::fold(next, edges, h.basepoint());
  if (!h.based()) folded = folded.cyclic_core();
  ImmersedCore out{folded, 0};
  for (const auto& e : folded.edges()) out.volume += g.length(dir_of_label(e.label));
  return out;
}

MarkedMetricGraph rebase(const MarkedMetricGraph& g, int v) {
  auto tree = spanning_tree(g, g.basepoint);
  const auto& delta = tree.path_to.at(static_cast<std::size_t>(v));
  Word u = path_word(g, delta);
  MarkedMetricGraph h = g;
  h.basepoint = v;
  for (auto& loop : h.loops) loop = tighten(concat(concat(reversed_path(delta), loop), delta));
  for (auto& w : h.labels) w = u * w * u.inverse();
  return h;
}

namespace {

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

// Direction of the same edge after deleting edge `removed`.
Dir shift_dir(Dir d, int removed) { return edge_of(d) > removed ? d - 2 : d; }

}  // namespace

MarkedMetricGraph smooth(const MarkedMetricGraph& input, std::vector<EdgePlacement>* placement) {
  MarkedMetricGraph g = input;
  for (auto& loop : g.loops) loop = tighten(loop);
  std::vector<EdgePlacement> place;
  for (int e = 0; e < g.num_edges(); ++e) place.push_back({2 * e, 0});
  while (true) {
    auto stars = g.stars();
    int v = -1;
    for (int x = 0; x < g.num_vertices; ++x) {
      const auto& s = stars[static_cast<std::size_t>(x)];
      if (x != g.basepoint && s.size() == 2 && edge_of(s[0]) != edge_of(s[1])) {
        v = x;
        break;
      }
    }
    if (v < 0) break;
    const auto& s = stars[static_cast<std::size_t>(v)];
    const Dir a = reverse(s[0]);
    const Dir b = s[1];
    const int ea = edge_of(a);
    const int eb = edge_of(b);
    const Rational la = g.length(a);
    const Rational lb = g.length(b);
    Edge merged{g.tail(a), g.head(b)};
    Word label = g.label(a) * g.label(b);
    for (auto& loop : g.loops) loop = replace_pair(loop, a, b, 2 * ea);
    // Where the old forward edges ea and eb sit inside the merged edge (numbered ea for now).
    EdgePlacement pa = is_forward(a) ? EdgePlacement{2 * ea, 0} : EdgePlacement{2 * ea + 1, lb};
    EdgePlacement pb = is_forward(b) ? EdgePlacement{2 * ea, la} : EdgePlacement{2 * ea + 1, 0};
    const Rational total = la + lb;
    for (auto& p : place) {
      int e = edge_of(p.dir);
      if (e != ea && e != eb) continue;
      const EdgePlacement& step = e == ea ? pa : pb;
      const Rational le = e == ea ? la : lb;
      if (is_forward(p.dir)) {
        p = {step.dir, step.offset + p.offset};
      } else {
        // Reverse traversal of the old edge, converted to the merged edge.
        p = {reverse(step.dir), total - step.offset - le + p.offset};
      }
    }
    g.edges[static_cast<std::size_t>(ea)] = merged;
    g.lengths[static_cast<std::size_t>(ea)] = total;
    g.labels[static_cast<std::size_t>(ea)] = label;
    g.edges.erase(g.edges.begin() + eb);
    g.lengths.erase(g.lengths.begin() + eb);
    g.labels.erase(g.labels.begin() + eb);
    for (auto& loop : g.loops) {
      for (auto& d : loop) d = shift_dir(d, eb);
    }
    for (auto& p : place) p.dir = shift_dir(p.dir, eb);
    for (auto& e : g.edges) {
      if (e.from > v) --e.from;
      if (e.to > v) --e.to;
    }
    if (g.basepoint > v) --g.basepoint;
    --g.num_vertices;
  }
  if (placement) *placement = std::move(place);
  return g;
}

std::optional<MarkedIsometry> find_marked_isometry(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  if (g.rank != h.rank || g.num_vertices != h.num_vertices || g.num_edges() != h.num_edges()) return std::nullopt;
  auto gs = g.stars();
  auto hs = h.stars();
  // Edges of g in BFS order from vertex 0, each with the direction leaving its first-reached endpoint.
  std::vector<Dir> order;
  {
    std::vector<bool> seen_v(static_cast<std::size_t>(g.num_vertices), false);
    std::vector<bool> seen_e(static_cast<std::size_t>(g.num_edges()), false);
    std::deque<int> queue{0};
    seen_v[0] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (Dir d : gs[static_cast<std::size_t>(v)]) {
        if (seen_e[static_cast<std::size_t>(edge_of(d))]) continue;
        seen_e[static_cast<std::size_t>(edge_of(d))] = true;
        order.push_back(d);
        int w = g.head(d);
        if (!seen_v[static_cast<std::size_t>(w)]) {
          seen_v[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
  }
  MarkedIsometry iso;
  iso.vertex_map.assign(static_cast<std::size_t>(g.num_vertices), -1);
  iso.edge_map.assign(static_cast<std::size_t>(g.num_edges()), -1);
  std::vector<bool> used_v(static_cast<std::size_t>(h.num_vertices), false);
  std::vector<bool> used_e(static_cast<std::size_t>(h.num_edges()), false);

  auto marking_ok = [&]() {
    std::vector<Word> words;
    for (const auto& loop : g.loops) {
      std::vector<Dir> image;
      for (Dir d : loop) {
        Dir m = iso.edge_map[static_cast<std::size_t>(edge_of(d))];
        image.push_back(is_forward(d) ? m : reverse(m));
      }
      words.push_back(path_word(h, image));
    }
    if (words.size() == 1) return words[0] == Word::letter(1) || CyclicWord::of(words[0]) == CyclicWord::of(Word::letter(1));
    return basis_conjugator(words).has_value();
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return marking_ok();
    Dir d = order[k];
    int a = g.tail(d);
    int b = g.head(d);
    int ia = iso.vertex_map[static_cast<std::size_t>(a)];
    for (Dir dh : hs[static_cast<std::size_t>(ia)]) {
      if (used_e[static_cast<std::size_t>(edge_of(dh))] || h.length(dh) != g.length(d)) continue;
      int hb = h.head(dh);
      bool fresh = false;
      int& ib = iso.vertex_map[static_cast<std::size_t>(b)];
      if (ib == -1) {
        if (used_v[static_cast<std::size_t>(hb)]) continue;
        ib = hb;
        used_v[static_cast<std::size_t>(hb)] = true;
        fresh = true;
      } else if (ib != hb) {
        continue;
      }
      // A loop must go to a loop.
      if ((a == b) != (h.tail(dh) == hb)) {
        if (fresh) {
          used_v[static_cast<std::size_t>(hb)] = false;
          ib = -1;
        }
        continue;
      }
      used_e[static_cast<std::size_t>(edge_of(dh))] = true;
      iso.edge_map[static_cast<std::size_t>(edge_of(d))] = is_forward(d) ? dh : reverse(dh);
      if (extend(k + 1)) return true;
      used_e[static_cast<std::size_t>(edge_of(dh))] = false;
      iso.edge_map[static_cast<std::size_t>(edge_of(d))] = -1;
      if (fresh) {
        used_v[static_cast<std::size_t>(hb)] = false;
        ib = -1;
      }
    }
    return false;
  };

  for (int start = 0; start < h.num_vertices; ++start) {
    iso.vertex_map[0] = start;
    used_v[static_cast<std::size_t>(start)] = true;
    if (extend(0)) return iso;
    used_v[static_cast<std::size_t>(start)] = false;
    iso.vertex_map[0] = -1;
  }
  return std::nullopt;
}

MarkedMetricGraph standard_marking(int num_vertices, const std::vector<Edge>& edges, const std::vector<Rational>& lengths,
                                   int basepoint) {
  MarkedMetricGraph g;
  g.num_vertices = num_vertices;
  g.edges = edges;
  g.lengths = lengths;
  g.basepoint = basepoint;
  g.rank = static_cast<int>(edges.size()) - num_vertices + 1;
  g.labels.assign(edges.size(), Word());
  auto tree = spanning_tree(g, basepoint);
  int next = 1;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.tree_edge[static_cast<std::size_t>(e)]) continue;
    const auto& edge = g.edges[static_cast<std::size_t>(e)];
    g.labels[static_cast<std::size_t>(e)] = Word::letter(next++);
    g.loops.push_back(tighten(concat(concat(tree.path_to[static_cast<std::size_t>(edge.from)], {2 * e}),
                                     reversed_path(tree.path_to[static_cast<std::size_t>(edge.to)]))));
  }
  return g;
}

MarkedMetricGraph twist(const MarkedMetricGraph& g, const Automorphism& phi) {
  if (phi.rank() != g.rank) throw Error("automorphism rank does not match the graph");
  MarkedMetricGraph h = g;
  for (auto& w : h.labels) w = phi(w);
  Automorphism inv = phi.inverse();
  for (int i = 0; i < g.rank; ++i) {
    h.loops[static_cast<std::size_t>(i)] = tighten(word_path(g, inv(Word::letter(i + 1))));
  }
  return h;
}

MarkedMetricGraph rose(const std::vector<Rational>& lengths) {
  std::vector<Edge> edges(lengths.size(), Edge{0, 0});
  return standard_marking(1, edges, lengths, 0);
}

MarkedMetricGraph random_marked_graph(Rng& rng, const RandomGraphOptions& options) {
  const int n = options.rank;
  if (n < 2) throw Error("random graphs need rank at least 2");
  while (true) {
    const int v = options.vertices > 0 ? options.vertices : uniform_int(rng, 1, 2 * n - 2);
    std::vector<Edge> edges;
    for (int x = 1; x < v; ++x) {
      int parent = uniform_int(rng, 0, x - 1);
      edges.push_back(uniform_int(rng, 0, 1) ? Edge{parent, x} : Edge{x, parent});
    }
    for (int c = 0; c < n; ++c) edges.push_back({uniform_int(rng, 0, v - 1), uniform_int(rng, 0, v - 1)});
    std::vector<int> degree(static_cast<std::size_t>(v), 0);
    for (const auto& e : edges) {
      ++degree[static_cast<std::size_t>(e.from)];
      ++degree[static_cast<std::size_t>(e.to)];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d < 3; })) continue;
    // Shuffle edge order so chords are not always last.
    for (std::size_t i = edges.size() - 1; i > 0; --i) {
      std::swap(edges[i], edges[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i)))]);
    }
    std::vector<Rational> lengths;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      Rational l(uniform_int(rng, 1, options.max_denominator), options.max_denominator);
      l.canonicalize();
      lengths.push_back(l);
    }
    auto g = standard_marking(v, edges, lengths, 0);
    if (options.automorphism_moves > 0) g = twist(g, random_automorphism(rng, n, options.automorphism_moves));
    return normalize(g);
  }
}

}  // namespace outer
