#include "outer/factor_complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "outer/error.hpp"
#include "outer/whitehead.hpp"

namespace outer {

std::vector<FactorHandle> project(const MarkedMetricGraph& g) {
  if (g.rank < 3) throw Error("the free factor graph needs rank at least 3");
  auto out = subgraph_factors(g);
  if (out.empty()) throw InternalError("marked graph with no proper core subgraph");
  return out;
}

FactorBall::FactorBall(int rank, int bound, std::vector<FactorHandle> vertices, bool capped)
    : rank_(rank), bound_(bound), capped_(capped) {
  add_vertices(std::move(vertices));
}

FactorBall FactorBall::extended(const std::vector<FactorHandle>& extra) const {
  FactorBall out = *this;
  out.add_vertices(extra);
  return out;
}

void FactorBall::add_vertices(std::vector<FactorHandle> vertices) {
  std::sort(vertices.begin(), vertices.end(), [](const FactorHandle& a, const FactorHandle& b) {
    if (a.complexity() != b.complexity()) return a.complexity() < b.complexity();
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.code() < b.code();
  });
  const int old = size();
  for (auto& v : vertices) {
    if (v.ambient_rank() != rank_) throw Error("factor of a different ambient rank");
    if (index_.emplace(v.code(), size()).second) vertices_.push_back(std::move(v));
  }
  const int n = size();
  adjacency_.resize(static_cast<std::size_t>(n));
  for (int i = old; i < n; ++i) {
    const auto& a = vertices_[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const auto& b = vertices_[static_cast<std::size_t>(j)];
      // A free factor properly contained in another has smaller rank.
      bool linked = (a.rank() < b.rank() && conjugate_into(a.core(), b.core())) ||
                    (b.rank() < a.rank() && conjugate_into(b.core(), a.core()));
      if (!linked) continue;
      adjacency_[static_cast<std::size_t>(i)].push_back(j);
      adjacency_[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::optional<int> FactorBall::index_of(const FactorHandle& f) const {
  auto it = index_.find(f.code());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FactorBall::distances_from(int i) const {
  std::vector<int> dist(vertices_.size(), -1);
  dist.at(static_cast<std::size_t>(i)) = 0;
  std::deque<int> queue{i};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adjacency_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(u)] >= 0) continue;
      dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

FactorBall build_ball(int rank, const std::vector<FactorHandle>& seeds, const BallOptions& options) {
  if (rank < 2) throw Error("proper free factors need rank at least 2");
  if (options.bound < 1 || options.product_length < 0 || options.vertex_cap < 1) throw Error("ball options must be positive");
  const auto autos = whitehead_automorphisms(rank);
  std::map<std::string, FactorHandle> seen;
  std::vector<FactorHandle> frontier;
  bool capped = false;
  for (unsigned mask = 1; mask + 1 < (1U << rank); ++mask) {
    std::vector<Word> gens;
    for (int i = 0; i < rank; ++i) {
      if ((mask >> i) & 1U) gens.push_back(Word::letter(i + 1));
    }
    auto h = FactorHandle::from_generators(rank, gens);
    if (seen.emplace(h.code(), h).second) frontier.push_back(h);
  }
  for (int depth = 0; depth < options.product_length && !capped; ++depth) {
    std::vector<FactorHandle> next;
    for (const auto& f : frontier) {
      for (const auto& t : autos) {
        std::vector<Word> gens;
        for (const auto& w : f.generators()) gens.push_back(t.apply(w));
        auto h = FactorHandle::from_generators(rank, gens);
        if (!seen.emplace(h.code(), h).second) continue;
        next.push_back(std::move(h));
        if (seen.size() >= options.vertex_cap) {
          capped = true;
          break;
        }
      }
      if (capped) break;
    }
    frontier = std::move(next);
  }
  std::vector<FactorHandle> vertices;
  for (auto& [code, h] : seen) {
    if (h.complexity() <= options.bound) vertices.push_back(std::move(h));
  }
  for (const auto& s : seeds) vertices.push_back(s);
  return FactorBall(rank, options.bound, std::move(vertices), capped);
}

std::optional<int> distance_upper(const FactorBall& ball, const FactorHandle& a, const FactorHandle& b) {
  auto i = ball.index_of(a);
  auto j = ball.index_of(b);
  if (!i || !j) throw Error("factor is not in the ball");
  int d = ball.distances_from(*i)[static_cast<std::size_t>(*j)];
  if (d < 0) return std::nullopt;
  return d;
}

namespace {

// All-pairs hop counts between the handles that occur in the sequence.
class SequenceDistances {
 public:
  SequenceDistances(const std::vector<std::vector<FactorHandle>>& sequence, const FactorBall& ball) : ball_(ball) {
    for (const auto& image : sequence) {
      if (image.empty()) throw Error("empty projection image");
      std::vector<int> ids;
      for (const auto& f : image) {
        auto i = ball.index_of(f);
        if (!i) throw Error("factor is not in the ball");
        ids.push_back(*i);
        if (!rows_.count(*i)) rows_.emplace(*i, ball.distances_from(*i));
      }
      images_.push_back(std::move(ids));
    }
  }

  int pair(int i, int j) const {
    int d = rows_.at(i)[static_cast<std::size_t>(j)];
    if (d < 0) {
      throw Error("factors " + ball_.vertices()[static_cast<std::size_t>(i)].code_hex() + " and " +
                  ball_.vertices()[static_cast<std::size_t>(j)].code_hex() + " are not connected in the ball");
    }
    return d;
  }

  // Diameter of the union of images begin..end.
  int diameter(int begin, int end) const {
    std::set<int> ids;
    for (int t = begin; t <= end; ++t) ids.insert(images_[static_cast<std::size_t>(t)].begin(), images_[static_cast<std::size_t>(t)].end());
    int d = 0;
    for (int a : ids) {
      for (int b : ids) d = std::max(d, pair(a, b));
    }
    return d;
  }

  int between(int s, int t) const {
    int d = -1;
    for (int a : images_[static_cast<std::size_t>(s)]) {
      for (int b : images_[static_cast<std::size_t>(t)]) {
        int x = pair(a, b);
        if (d < 0 || x < d) d = x;
      }
    }
    return d;
  }

 private:
  const FactorBall& ball_;
  std::vector<std::vector<int>> images_;
  std::map<int, std::vector<int>> rows_;
};

}  // namespace

QgCertificate check_reparam_quasigeodesic(const std::vector<std::vector<FactorHandle>>& sequence, int K,
                                          const FactorBall& ball) {
  if (sequence.empty()) throw Error("empty sequence");
  if (K < 0) throw Error("K must be non-negative");
  SequenceDistances d(sequence, ball);
  QgCertificate c;
  const int n = static_cast<int>(sequence.size());
  c.breakpoints.push_back(0);
  int begin = 0;
  int end = 0;
  int diam = d.diameter(0, 0);
  if (diam > K) {
    c.windows_ok = false;
    c.offending = QgWindow{0, 0, diam};
    return c;
  }
  while (end + 1 < n) {
    int wider = d.diameter(begin, end + 1);
    if (wider <= K) {
      ++end;
      diam = wider;
      continue;
    }
    if (end == begin) {
      c.windows_ok = false;
      c.offending = QgWindow{begin, end + 1, wider};
      return c;
    }
    c.windows.push_back({begin, end, diam});
    c.breakpoints.push_back(end);
    begin = end;
    diam = d.diameter(begin, end);
  }
  if (end > begin || c.windows.empty()) {
    c.windows.push_back({begin, end, diam});
    if (end > begin) c.breakpoints.push_back(end);
  }
  const int m = static_cast<int>(c.breakpoints.size());
  for (int i = 0; i < m; ++i) {
    c.progress.push_back(d.between(c.breakpoints[0], c.breakpoints[static_cast<std::size_t>(i)]));
    for (int j = i + 1; j < m; ++j) {
      if (j - i > d.between(c.breakpoints[static_cast<std::size_t>(i)], c.breakpoints[static_cast<std::size_t>(j)]) + 2) {
        c.consistent = false;
        c.violations.emplace_back(i, j);
      }
    }
  }
  return c;
}

}  // namespace outer
