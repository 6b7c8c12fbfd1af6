#include "outer/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "outer/error.hpp"

namespace outer {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > 16) throw Error("Whitehead automorphisms need rank in [1, 16]");
}

void check_word(int rank, const CyclicWord& w) {
  for (Letter x : w.letters()) {
    if (std::abs(x) > rank) throw Error("word uses a generator beyond the rank");
  }
}

bool connected(const WhiteheadGraph& g, const std::vector<bool>& keep) {
  const int n = g.num_vertices();
  int start = -1;
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (!keep[static_cast<std::size_t>(v)]) continue;
    ++count;
    if (start < 0) start = v;
  }
  if (count <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (u == v || !keep[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
      if (g.multiplicity[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] == 0) continue;
      seen[static_cast<std::size_t>(u)] = true;
      ++reached;
      queue.push_back(u);
    }
  }
  return reached == count;
}

}  // namespace

int WhiteheadGraph::num_edges() const {
  int total = 0;
  for (int i = 0; i < num_vertices(); ++i) {
    for (int j = i; j < num_vertices(); ++j) total += multiplicity[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return total;
}

int WhiteheadGraph::degree(int key) const {
  const auto& row = multiplicity[static_cast<std::size_t>(key)];
  return std::accumulate(row.begin(), row.end(), 0) + row[static_cast<std::size_t>(key)];
}

WhiteheadGraph whitehead_graph(int rank, const CyclicWord& w) {
  if (w.trivial()) throw Error("Whitehead graph of the trivial class");
  check_word(rank, w);
  WhiteheadGraph g;
  g.rank = rank;
  g.multiplicity.assign(static_cast<std::size_t>(2 * rank), std::vector<int>(static_cast<std::size_t>(2 * rank), 0));
  const auto& x = w.letters();
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto u = static_cast<std::size_t>(letter_key(-x[i]));
    auto v = static_cast<std::size_t>(letter_key(x[(i + 1) % x.size()]));
    ++g.multiplicity[u][v];
    if (u != v) ++g.multiplicity[v][u];
  }
  return g;
}

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::disconnected:
      return "disconnected";
    case Connectivity::cut_vertex:
      return "cut vertex";
    case Connectivity::two_connected:
      return "two-connected";
  }
  return "?";
}

ConnectivityReport connectivity_report(const WhiteheadGraph& g) {
  ConnectivityReport r;
  const int n = g.num_vertices();
  std::vector<bool> support(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) support[static_cast<std::size_t>(v)] = g.degree(v) > 0;
  for (int i = 1; i <= g.rank; ++i) {
    if (!support[static_cast<std::size_t>(letter_key(i))] && !support[static_cast<std::size_t>(letter_key(-i))]) {
      r.absent_generators.push_back(i);
    }
  }
  if (!connected(g, support)) {
    r.kind = Connectivity::disconnected;
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!support[static_cast<std::size_t>(v)]) continue;
    auto rest = support;
    rest[static_cast<std::size_t>(v)] = false;
    if (!connected(g, rest)) {
      r.kind = Connectivity::cut_vertex;
      r.cut = letter_from_key(v);
      return r;
    }
  }
  return r;
}

WhiteheadAutomorphism::WhiteheadAutomorphism(int rank, Letter special, std::vector<Letter> cut)
    : rank_(rank), special_(special), mask_(0) {
  check_rank(rank);
  if (special == 0 || std::abs(special) > rank) throw Error("special letter outside the rank");
  for (Letter x : cut) {
    if (x == 0 || std::abs(x) > rank) throw Error("cut letter outside the rank");
    unsigned bit = 1U << letter_key(x);
    if (mask_ & bit) throw Error("repeated letter in cut set");
    mask_ |= bit;
  }
  if (!in_cut(special)) throw Error("cut set must contain the special letter");
  if (in_cut(-special)) throw Error("cut set must not contain the inverse of the special letter");
}

std::vector<Letter> WhiteheadAutomorphism::cut() const {
  std::vector<Letter> out;
  for (int k = 0; k < 2 * rank_; ++k) {
    if ((mask_ >> k) & 1U) out.push_back(letter_from_key(k));
  }
  return out;
}

Word WhiteheadAutomorphism::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(3 * w.size());
  for (Letter x : w.letters()) {
    if (std::abs(x) > rank_) throw Error("word uses a generator beyond the rank");
    if (std::abs(x) == std::abs(special_)) {
      out.push_back(x);
      continue;
    }
    if (in_cut(-x)) out.push_back(-special_);
    out.push_back(x);
    if (in_cut(x)) out.push_back(special_);
  }
  return Word::reduce(out);
}

CyclicWord WhiteheadAutomorphism::apply(const CyclicWord& w) const { return CyclicWord::of(apply(w.word())); }

WhiteheadAutomorphism WhiteheadAutomorphism::inverse() const {
  auto c = cut();
  std::replace(c.begin(), c.end(), special_, -special_);
  return WhiteheadAutomorphism(rank_, -special_, c);
}

Automorphism WhiteheadAutomorphism::automorphism() const {
  std::vector<Word> images;
  for (int i = 1; i <= rank_; ++i) images.push_back(apply(Word::letter(i)));
  return Automorphism(rank_, images);
}

std::string WhiteheadAutomorphism::format() const {
  FreeGroup group(rank_);
  std::string s = "(" + group.format(Word::letter(special_)) + ";";
  for (Letter x : cut()) s += " " + group.format(Word::letter(x));
  return s + ")";
}

bool operator<(const WhiteheadAutomorphism& x, const WhiteheadAutomorphism& y) {
  if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
  if (x.special_ != y.special_) return letter_key(x.special_) < letter_key(y.special_);
  return x.mask_ < y.mask_;
}

std::vector<WhiteheadAutomorphism> whitehead_automorphisms(int rank) {
  check_rank(rank);
  std::vector<WhiteheadAutomorphism> out;
  const int n = 2 * rank;
  for (int s = 0; s < n; ++s) {
    const Letter a = letter_from_key(s);
    std::vector<int> others;
    for (int k = 0; k < n; ++k) {
      if (k != s && k != letter_key(-a)) others.push_back(k);
    }
    for (unsigned m = 1; m < (1U << others.size()); ++m) {
      std::vector<Letter> cut{a};
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((m >> i) & 1U) cut.push_back(letter_from_key(others[i]));
      }
      out.emplace_back(rank, a, cut);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicWord symmetry_class(int rank, const CyclicWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<CyclicWord> best;
  std::vector<Letter> image(w.letters().size());
  do {
    for (unsigned signs = 0; signs < (1U << rank); ++signs) {
      for (std::size_t i = 0; i < image.size(); ++i) {
        Letter x = w.letters()[i];
        int g = std::abs(x) - 1;
        Letter y = perm[static_cast<std::size_t>(g)] * (((signs >> g) & 1U) ? -1 : 1);
        image[i] = x > 0 ? y : -y;
      }
      auto c = CyclicWord::of(image);
      if (!best || c < *best) best = std::move(c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

Reduction reduce_to_minimal(int rank, const CyclicWord& w, std::size_t cap) {
  check_rank(rank);
  check_word(rank, w);
  const auto autos = whitehead_automorphisms(rank);
  Reduction r;
  r.minimal = w;
  while (true) {
    std::optional<std::size_t> best;
    CyclicWord best_word;
    for (std::size_t i = 0; i < autos.size(); ++i) {
      auto image = autos[i].apply(r.minimal);
      if (image.size() < r.minimal.size() && (!best || image.size() < best_word.size())) {
        best = i;
        best_word = std::move(image);
      }
    }
    if (!best) break;
    r.steps.push_back(autos[*best]);
    r.minimal = std::move(best_word);
  }

  std::set<CyclicWord> seen{symmetry_class(rank, r.minimal)};
  std::deque<CyclicWord> queue{r.minimal};
  r.level_set.push_back(r.minimal);
  while (!queue.empty()) {
    auto u = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : autos) {
      auto image = t.apply(u);
      if (image.size() != u.size()) continue;
      if (!seen.insert(symmetry_class(rank, image)).second) continue;
      if (r.level_set.size() >= cap) {
        r.complete = false;
        return r;
      }
      r.level_set.push_back(image);
      queue.push_back(std::move(image));
    }
  }
  return r;
}

SimplicityVerdict is_simple(int rank, const CyclicWord& w, std::size_t cap) {
  if (w.trivial()) throw Error("simplicity of the trivial class");
  auto r = reduce_to_minimal(rank, w, cap);
  for (const auto& u : r.level_set) {
    auto report = connectivity_report(whitehead_graph(rank, u));
    if (!report.absent_generators.empty()) return {true, true, u, "minimal word omits a generator"};
    if (report.kind != Connectivity::two_connected) {
      return {true, true, u, "minimal word has a " + to_string(report.kind) + " Whitehead graph"};
    }
  }
  if (!r.complete) return {false, false, r.minimal, "level-set cap reached"};
  return {false, true, r.minimal, "every minimal word has a two-connected Whitehead graph"};
}

}  // namespace outer
