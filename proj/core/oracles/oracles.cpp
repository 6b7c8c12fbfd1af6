#include "oracles/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>

#include "outer/error.hpp"

namespace outer::oracle {

std::vector<Word> all_reduced_words(int rank, int max_length) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_length) continue;
    for (int g = 1; g <= rank; ++g) {
      for (Letter x : {g, -g}) {
        if (!out[i].empty() && out[i].back() == -x) continue;
        out.push_back(out[i] * Word::letter(x));
      }
    }
  }
  return out;
}

std::optional<std::set<Word>> subgroup_elements(const std::vector<Word>& generators, int max_length, std::size_t budget) {
  std::size_t total = 0;
  for (const auto& g : generators) total += g.size();
  const std::size_t bound = static_cast<std::size_t>(max_length) + 2 * total;
  std::set<Word> seen{Word()};
  std::deque<Word> queue{Word()};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      for (const Word& step : {g, g.inverse()}) {
        Word next = w * step;
        if (next.size() > bound || seen.count(next)) continue;
        if (seen.size() >= budget) return std::nullopt;
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  std::set<Word> out;
  for (const auto& w : seen) {
    if (static_cast<int>(w.size()) <= max_length) out.insert(w);
  }
  return out;
}

bool conjugator_search(const std::vector<Word>& h, const SubgroupCoreGraph& k_based, int max_length) {
  int rank = 0;
  for (const auto& w : h) rank = std::max(rank, w.max_generator());
  for (const auto& e : k_based.edges()) rank = std::max(rank, std::abs(e.label));
  for (const auto& c : all_reduced_words(rank, max_length)) {
    bool all = true;
    for (const auto& w : h) {
      if (!contains_element(k_based, c * w * c.inverse())) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<Word> random_representation(Rng& rng, std::vector<Word> generators, int moves) {
  int rank = 0;
  for (const auto& w : generators) rank = std::max(rank, w.max_generator());
  const int n = static_cast<int>(generators.size());
  for (int m = 0; m < moves && n > 1; ++m) {
    int i = uniform_int(rng, 0, n - 1);
    int j = uniform_int(rng, 0, n - 2);
    if (j >= i) ++j;
    Word g = generators[static_cast<std::size_t>(j)];
    if (uniform_int(rng, 0, 1)) g = g.inverse();
    auto& target = generators[static_cast<std::size_t>(i)];
    target = uniform_int(rng, 0, 1) ? target * g : g * target;
  }
  for (int i = n - 1; i > 0; --i) std::swap(generators[static_cast<std::size_t>(i)], generators[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  Word c = random_word(rng, std::max(rank, 1), uniform_int(rng, 0, 4));
  for (auto& w : generators) {
    w = c * w * c.inverse();
    if (uniform_int(rng, 0, 1)) w = w.inverse();
  }
  return generators;
}

Rational max_loop_stretch(const MarkedMetricGraph& g, const MarkedMetricGraph& h) {
  const int ne = g.num_edges();
  Rational best = 0;
  std::vector<int> crossed(static_cast<std::size_t>(ne), 0);
  std::vector<Dir> loop;
  std::function<void(int)> extend = [&](int first_edge) {
    Dir last = loop.back();
    int at = g.head(last);
    if (at == g.tail(loop.front()) && last != reverse(loop.front())) {
      Rational ratio = translation_length(h, path_word(g, loop)) / path_length(g, loop);
      if (ratio > best) best = ratio;
    }
    for (Dir d = 2 * first_edge; d < 2 * ne; ++d) {
      if (g.tail(d) != at || d == reverse(last) || crossed[static_cast<std::size_t>(edge_of(d))] == 2) continue;
      ++crossed[static_cast<std::size_t>(edge_of(d))];
      loop.push_back(d);
      extend(first_edge);
      loop.pop_back();
      --crossed[static_cast<std::size_t>(edge_of(d))];
    }
  };
  for (int e = 0; e < ne; ++e) {
    for (Dir s : {2 * e, 2 * e + 1}) {
      crossed[static_cast<std::size_t>(e)] = 1;
      loop = {s};
      extend(e);
      crossed[static_cast<std::size_t>(e)] = 0;
    }
  }
  return best;
}

bool has_spanning_legal_loop(const TrainTrackStructure& tt, bool both_orientations) {
  const int ne = tt.num_edges();
  auto in_support = [&](Dir d) { return tt.gate[static_cast<std::size_t>(d)] >= 0; };
  auto key = [&](Dir d) { return both_orientations ? d : edge_of(d); };
  std::uint64_t full = 0;
  int first = -1;
  for (int e = 0; e < ne; ++e) {
    if (!in_support(2 * e)) continue;
    if (first < 0) first = e;
    full |= both_orientations ? (std::uint64_t{3} << (2 * e)) : (std::uint64_t{1} << e);
  }
  if (first < 0 || 2 * ne > 64) throw Error("oracle needs a nonempty support of at most 32 edges");
  auto step_ok = [&](Dir d, Dir x) {
    return in_support(x) && tt.tail(x) == tt.head(d) && tt.gate[static_cast<std::size_t>(reverse(d))] != tt.gate[static_cast<std::size_t>(x)];
  };
  std::vector<Dir> starts{2 * first};
  if (!both_orientations) starts.push_back(2 * first + 1);
  for (Dir s : starts) {
    std::set<std::pair<Dir, std::uint64_t>> seen;
    std::deque<std::pair<Dir, std::uint64_t>> queue;
    queue.push_back({s, std::uint64_t{1} << key(s)});
    seen.insert(queue.front());
    while (!queue.empty()) {
      auto [d, mask] = queue.front();
      queue.pop_front();
      if (mask == full && step_ok(d, s)) return true;
      for (Dir x = 0; x < 2 * ne; ++x) {
        if (!step_ok(d, x)) continue;
        std::pair<Dir, std::uint64_t> next{x, mask | (std::uint64_t{1} << key(x))};
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

WhiteheadProductSearch::WhiteheadProductSearch(int rank, int depth) : rank_(rank), depth_(depth) {
  // (A, a) with a in A, a^-1 not in A; A = {a} is the identity and is skipped.
  for (Letter a = -rank; a <= rank; ++a) {
    if (a == 0) continue;
    std::vector<Letter> others;
    for (Letter x = -rank; x <= rank; ++x) {
      if (x != 0 && x != a && x != -a) others.push_back(x);
    }
    for (unsigned m = 1; m < (1U << others.size()); ++m) {
      std::set<Letter> cut{a};
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((m >> i) & 1U) cut.insert(others[i]);
      }
      std::vector<Word> images;
      for (int g = 1; g <= rank; ++g) {
        if (g == std::abs(a)) {
          images.push_back(Word::letter(g));
          continue;
        }
        Word img = Word::letter(g);
        if (cut.count(g)) img = img * Word::letter(a);
        if (cut.count(-g)) img = Word::letter(-a) * img;
        images.push_back(img);
      }
      autos_.emplace_back(rank, images);
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1U << rank); ++signs) {
      std::vector<int> s(perm);
      for (int g = 0; g < rank; ++g) {
        if ((signs >> g) & 1U) s[static_cast<std::size_t>(g)] = -s[static_cast<std::size_t>(g)];
      }
      symmetries_.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Letter> WhiteheadProductSearch::canonical(const CyclicWord& w) const {
  std::vector<Letter> best;
  for (const auto& s : symmetries_) {
    std::vector<Letter> image;
    for (Letter x : w.letters()) image.push_back(x > 0 ? s[static_cast<std::size_t>(x - 1)] : -s[static_cast<std::size_t>(-x - 1)]);
    auto c = CyclicWord::of(image).letters();
    if (best.empty() || c < best) best = c;
  }
  return best;
}

bool WhiteheadProductSearch::simple(const CyclicWord& w) { return search(w, depth_); }

bool WhiteheadProductSearch::search(const CyclicWord& w, int depth) {
  std::vector<bool> used(static_cast<std::size_t>(rank_) + 1, false);
  for (Letter x : w.letters()) used[static_cast<std::size_t>(std::abs(x))] = true;
  if (std::count(used.begin() + 1, used.end(), true) < rank_) return true;
  if (depth == 0) return false;
  auto key = canonical(w);
  auto it = memo_.find(key);
  if (it != memo_.end() && it->second >= depth) return false;
  for (const auto& phi : autos_) {
    if (search(phi.apply(w), depth - 1)) return true;
  }
  memo_[key] = depth;
  return false;
}

}  // namespace outer::oracle
