#include "outer/stallings.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "outer/error.hpp"

namespace outer {

namespace {

class Folder {
 public:
  explicit Folder(int n) : parent_(static_cast<std::size_t>(n)), out_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }

  void add_edge(int u, int v, Letter label) {
    attach(find(u), label, find(v));
    drain();
  }

  std::map<Letter, int>& out(int v) { return out_[static_cast<std::size_t>(v)]; }

 private:
  void attach(int u, Letter label, int v) {
    auto& ou = out(u);
    auto& ov = out(v);
    auto a = ou.find(label);
    if (a == ou.end()) {
      ou.emplace(label, v);
    } else if (int w = find(a->second); w != v) {
      pending_.emplace_back(w, v);
    }
    auto b = ov.find(-label);
    if (b == ov.end()) {
      ov.emplace(-label, u);
    } else if (int x = find(b->second); x != u) {
      pending_.emplace_back(x, u);
    }
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (out(a).size() < out(b).size()) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    auto moved = std::move(out(b));
    out(b).clear();
    for (const auto& [label, t] : moved) attach(a, label, find(t));
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
  }

  std::vector<int> parent_;
  std::vector<std::map<Letter, int>> out_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

SubgroupCoreGraph SubgroupCoreGraph::fold(int num_vertices, const std::vector<LabeledEdge>& input,
                                          std::optional<int> basepoint) {
  Folder folder(num_vertices);
  for (const auto& e : input) {
    if (e.label == 0) throw Error("label 0 is not allowed");
    folder.add_edge(e.from, e.to, e.label);
  }

  std::vector<int> reps;
  for (int v = 0; v < num_vertices; ++v) {
    if (folder.find(v) == v) reps.push_back(v);
  }
  std::optional<int> base;
  if (basepoint) base = folder.find(*basepoint);

  std::vector<LabeledEdge> edges;
  for (int u : reps) {
    for (const auto& [label, t] : folder.out(u)) {
      if (label > 0) edges.push_back({u, folder.find(t), label});
    }
  }

  std::map<int, int> degree;
  for (int u : reps) degree[u] = 0;
  for (const auto& e : edges) {
    ++degree[e.from];
    ++degree[e.to];
  }
  std::vector<bool> removed_edge(edges.size(), false);
  std::map<int, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].from].push_back(i);
    if (edges[i].to != edges[i].from) incident[edges[i].to].push_back(i);
  }
  std::set<int> dead;
  std::deque<int> queue;
  for (int u : reps) {
    if (degree[u] <= 1 && u != base) queue.push_back(u);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dead.count(u) || u == base || degree[u] > 1) continue;
    dead.insert(u);
    for (std::size_t i : incident[u]) {
      if (removed_edge[i]) continue;
      removed_edge[i] = true;
      int other = edges[i].from == u ? edges[i].to : edges[i].from;
      --degree[u];
      --degree[other];
      if (!dead.count(other) && other != base && degree[other] <= 1) queue.push_back(other);
    }
  }

  std::map<int, int> index;
  for (int u : reps) {
    if (!dead.count(u)) index.emplace(u, static_cast<int>(index.size()));
  }

  SubgroupCoreGraph g;
  g.star_.resize(index.size());
  if (base) g.basepoint_ = index.at(*base);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removed_edge[i]) continue;
    LabeledEdge e{index.at(edges[i].from), index.at(edges[i].to), edges[i].label};
    g.edges_.push_back(e);
    g.star_[static_cast<std::size_t>(e.from)][e.label] = e.to;
    g.star_[static_cast<std::size_t>(e.to)][-e.label] = e.from;
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  return g;
}

std::optional<int> SubgroupCoreGraph::follow(int v, Letter label) const {
  const auto& s = star(v);
  auto it = s.find(label);
  if (it == s.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SubgroupCoreGraph::read(int v, const Word& w) const {
  std::optional<int> at = v;
  for (Letter x : w.letters()) {
    at = follow(*at, x);
    if (!at) return std::nullopt;
  }
  return at;
}

SubgroupCoreGraph SubgroupCoreGraph::cyclic_core() const { return fold(num_vertices(), edges_, std::nullopt); }

SubgroupCoreGraph core_graph(const FreeGroup& group, const std::vector<Word>& generators, bool based) {
  if (generators.empty()) throw Error("empty generator list");
  std::vector<LabeledEdge> edges;
  int next = 1;
  for (const auto& w : generators) {
    group.check(w);
    if (w.empty()) throw Error("trivial generator");
    int prev = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      int to = (k + 1 == w.size()) ? 0 : next++;
      edges.push_back({prev, to, w[k]});
      prev = to;
    }
  }
  auto h = SubgroupCoreGraph::fold(next, edges, 0);
  return based ? h : h.cyclic_core();
}

bool contains_element(const SubgroupCoreGraph& h, const Word& g) {
  if (!h.based()) throw Error("membership needs a based core graph");
  auto end = h.read(*h.basepoint(), g);
  return end && *end == *h.basepoint();
}

std::optional<std::vector<int>> conjugate_into(const SubgroupCoreGraph& h_in, const SubgroupCoreGraph& k_in) {
  const SubgroupCoreGraph h = h_in.based() ? h_in.cyclic_core() : h_in;
  const SubgroupCoreGraph k = k_in.based() ? k_in.cyclic_core() : k_in;
  if (h.num_vertices() == 0) return std::vector<int>{};
  for (int seed = 0; seed < k.num_vertices(); ++seed) {
    std::vector<int> image(static_cast<std::size_t>(h.num_vertices()), -1);
    image[0] = seed;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [label, t] : h.star(u)) {
        auto target = k.follow(image[static_cast<std::size_t>(u)], label);
        if (!target) {
          ok = false;
          break;
        }
        int& slot = image[static_cast<std::size_t>(t)];
        if (slot == -1) {
          slot = *target;
          stack.push_back(t);
        } else if (slot != *target) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return image;
  }
  return std::nullopt;
}

std::vector<Word> basis(const SubgroupCoreGraph& h) {
  if (h.num_vertices() == 0) return {};
  const int root = h.basepoint().value_or(0);
  std::vector<Word> prefix(static_cast<std::size_t>(h.num_vertices()));
  std::vector<int> parent(static_cast<std::size_t>(h.num_vertices()), -2);
  std::vector<Letter> parent_label(static_cast<std::size_t>(h.num_vertices()), 0);
  parent[static_cast<std::size_t>(root)] = -1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [label, t] : h.star(u)) {
      if (parent[static_cast<std::size_t>(t)] != -2) continue;
      parent[static_cast<std::size_t>(t)] = u;
      parent_label[static_cast<std::size_t>(t)] = label;
      prefix[static_cast<std::size_t>(t)] = prefix[static_cast<std::size_t>(u)] * Word::letter(label);
      queue.push_back(t);
    }
  }
  std::vector<Word> out;
  for (const auto& e : h.edges()) {
    auto from = static_cast<std::size_t>(e.from);
    auto to = static_cast<std::size_t>(e.to);
    bool tree = (parent[to] == e.from && parent_label[to] == e.label && e.from != e.to) ||
                (parent[from] == e.to && parent_label[from] == -e.label && e.from != e.to);
    if (tree) continue;
    out.push_back(prefix[from] * Word::letter(e.label) * prefix[to].inverse());
  }
  return out;
}

namespace {

std::vector<int> bfs_code(const SubgroupCoreGraph& h, int start) {
  const auto n = static_cast<std::size_t>(h.num_vertices());
  std::vector<int> index(n, -1);
  std::vector<int> order{start};
  index[static_cast<std::size_t>(start)] = 0;
  std::vector<int> code{h.num_vertices(), h.num_edges()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& s = h.star(order[i]);
    code.push_back(static_cast<int>(s.size()));
    for (const auto& [label, t] : s) {
      int& slot = index[static_cast<std::size_t>(t)];
      if (slot == -1) {
        slot = static_cast<int>(order.size());
        order.push_back(t);
      }
      code.push_back(label);
      code.push_back(slot);
    }
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code_ints(const SubgroupCoreGraph& h) {
  if (h.num_vertices() == 0) return {0, 0};
  if (h.based()) return bfs_code(h, *h.basepoint());
  std::vector<int> best;
  for (int s = 0; s < h.num_vertices(); ++s) {
    auto c = bfs_code(h, s);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

FactorHandle canonical_code(const SubgroupCoreGraph& h, int ambient_rank) {
  FactorHandle f;
  f.core_ = h.based() ? h.cyclic_core() : h;
  if (f.core_.trivial()) throw Error("trivial subgroup has no factor handle");
  if (f.core_.rank() < 1 || f.core_.rank() >= ambient_rank) throw Error("factor rank must lie in [1, N-1]");
  f.ambient_rank_ = ambient_rank;
  for (int x : canonical_code_ints(f.core_)) {
    auto u = static_cast<std::uint32_t>(x) ^ 0x80000000u;
    for (int shift = 24; shift >= 0; shift -= 8) f.code_.push_back(static_cast<char>((u >> shift) & 0xffu));
  }
  f.generators_ = basis(f.core_);
  return f;
}

FactorHandle FactorHandle::from_generators(int ambient_rank, const std::vector<Word>& generators) {
  return canonical_code(core_graph(FreeGroup(ambient_rank), generators, false), ambient_rank);
}

std::string FactorHandle::code_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (char c : code_) {
    auto b = static_cast<unsigned char>(c);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::string to_dot(const SubgroupCoreGraph& h, const FreeGroup& group) {
  std::ostringstream os;
  os << "digraph core {\n";
  for (int v = 0; v < h.num_vertices(); ++v) {
    os << "  v" << v;
    if (h.basepoint() == v) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const auto& e : h.edges()) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << group.format(Word::letter(e.label)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace outer
