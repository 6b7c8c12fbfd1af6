#include "outer/free_group.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "outer/error.hpp"

namespace outer {

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw Error("letter 0 is not a generator");
    if (!w.letters_.empty() && w.letters_.back() == -x) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

int Word::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, std::abs(x));
  return m;
}

Word operator*(const Word& u, const Word& v) {
  std::size_t k = 0;
  const std::size_t n = u.size();
  while (k < n && k < v.size() && u.letters_[n - 1 - k] == -v.letters_[k]) ++k;
  Word w;
  w.letters_.reserve(n + v.size() - 2 * k);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(k));
  w.letters_.insert(w.letters_.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(k), v.letters_.end());
  return w;
}

namespace {

std::strong_ordering compare_letters(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return letter_key(a[i]) <=> letter_key(b[i]);
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering operator<=>(const Word& u, const Word& v) { return compare_letters(u.letters_, v.letters_); }

std::strong_ordering operator<=>(const CyclicWord& u, const CyclicWord& v) {
  return compare_letters(u.letters_, v.letters_);
}

std::size_t least_rotation(std::span<const int> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = s[(i + k) % n];
    int b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word cyclically_reduce(const Word& w, Word* conjugator) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  if (conjugator) *conjugator = Word::reduce(std::span<const Letter>(l.data(), lo));
  return Word::reduce(std::span<const Letter>(l.data() + lo, hi - lo));
}

CyclicWord CyclicWord::of(const Word& w) {
  Word core = cyclically_reduce(w);
  std::vector<int> keys;
  keys.reserve(core.size());
  for (Letter x : core.letters()) keys.push_back(letter_key(x));
  std::size_t r = least_rotation(keys);
  CyclicWord c;
  c.letters_.reserve(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) c.letters_.push_back(core[(r + i) % core.size()]);
  return c;
}

CyclicWord cyclic_normal_form(const Word& w) { return CyclicWord::of(w); }

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1) throw Error("rank must be positive");
}

void FreeGroup::check(const Word& w) const {
  for (Letter x : w.letters()) {
    if (x == 0 || std::abs(x) > rank_) {
      throw Error("letter " + std::to_string(x) + " outside rank " + std::to_string(rank_));
    }
  }
}

void FreeGroup::check(const CyclicWord& w) const { check(w.word()); }

Word FreeGroup::word(std::span<const Letter> letters) const {
  Word w = Word::reduce(letters);
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) > rank_) {
      throw Error("letter " + std::to_string(x) + " outside rank " + std::to_string(rank_));
    }
  }
  return w;
}

Word FreeGroup::generator(int i) const {
  if (i < 1 || i > rank_) throw Error("generator index out of range");
  return Word::letter(i);
}

Word FreeGroup::parse(std::string_view text) const {
  std::vector<Letter> letters;
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '[')) trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == ']')) trimmed.remove_suffix(1);
  if (trimmed.empty() || (trimmed == "1" && rank_ <= 26)) return Word();
  const bool numeric = trimmed.find_first_of("0123456789") != std::string_view::npos;
  if (!numeric) {
    for (char ch : trimmed) {
      if (ch >= 'a' && ch <= 'z') {
        letters.push_back(ch - 'a' + 1);
      } else if (ch >= 'A' && ch <= 'Z') {
        letters.push_back(-(ch - 'A' + 1));
      } else if (ch != ' ') {
        throw Error(std::string("unexpected character '") + ch + "' in word");
      }
    }
  } else {
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
      while (pos < trimmed.size() && (trimmed[pos] == ',' || trimmed[pos] == ' ')) ++pos;
      if (pos >= trimmed.size()) break;
      int value = 0;
      auto begin = trimmed.data() + pos;
      if (*begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, trimmed.data() + trimmed.size(), value);
      if (ec != std::errc() || ptr == begin) throw Error("malformed integer word: '" + std::string(text) + "'");
      letters.push_back(value);
      pos = static_cast<std::size_t>(ptr - trimmed.data());
    }
  }
  return word(letters);
}

std::string FreeGroup::format(const Word& w) const {
  std::string out;
  if (rank_ <= 26) {
    if (w.empty()) return "1";
    for (Letter x : w.letters()) out.push_back(static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' - x - 1));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

std::string FreeGroup::format(const CyclicWord& w) const { return format(w.word()); }

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const Word& img = images.at(static_cast<std::size_t>(std::abs(x) - 1));
    if (x > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
  }
  return Word::reduce(out);
}

namespace {

// Stallings folding of the wedge of the images, with each edge also carrying a word
// in the dual alphabet so that the surviving rose reads off the inverse.
struct TrackedEdge {
  int from;
  int to;
  Letter label;  // positive
  Word tag;
  bool alive = true;
};

void gauge(std::vector<TrackedEdge>& edges, int w, const Word& h) {
  Word hinv = h.inverse();
  for (auto& e : edges) {
    if (!e.alive) continue;
    if (e.from == w) e.tag = hinv * e.tag;
    if (e.to == w) e.tag = e.tag * h;
  }
}

}  // namespace

std::vector<Word> invert_basis(int rank, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != rank) return {};
  std::vector<TrackedEdge> edges;
  int next_vertex = 1;
  for (int j = 0; j < rank; ++j) {
    const Word& u = images[static_cast<std::size_t>(j)];
    if (u.empty()) return {};
    int prev = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      int next = (k + 1 == u.size()) ? 0 : next_vertex++;
      Letter x = u[k];
      Word tag = (k == 0) ? Word::letter(j + 1) : Word();
      if (x > 0) {
        edges.push_back({prev, next, x, tag});
      } else {
        edges.push_back({next, prev, -x, tag.inverse()});
      }
      prev = next;
    }
  }

  struct End {
    std::size_t edge;
    Word tag;
    int target;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, Letter>, End> ends;
    for (std::size_t i = 0; i < edges.size() && !changed; ++i) {
      if (!edges[i].alive) continue;
      const auto& e = edges[i];
      End forward{i, e.tag, e.to};
      End backward{i, e.tag.inverse(), e.from};
      for (auto [key, end] : {std::pair{std::pair{e.from, e.label}, forward}, std::pair{std::pair{e.to, -e.label}, backward}}) {
        auto [it, fresh] = ends.emplace(key, end);
        if (fresh) continue;
        const End& other = it->second;
        if (other.target == end.target) {
          if (other.tag != end.tag) return {};
        } else {
          int keep = other.target;
          int drop = end.target;
          Word h = end.tag.inverse() * other.tag;
          if (drop == 0) {
            std::swap(keep, drop);
            h = other.tag.inverse() * end.tag;
          }
          gauge(edges, drop, h);
          for (auto& f : edges) {
            if (!f.alive) continue;
            if (f.from == drop) f.from = keep;
            if (f.to == drop) f.to = keep;
          }
        }
        // After the merge the two edges are parallel with equal tags.
        edges[i].alive = false;
        changed = true;
        break;
      }
    }
  }

  std::vector<Word> inverse(static_cast<std::size_t>(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  int alive = 0;
  for (const auto& e : edges) {
    if (!e.alive) continue;
    ++alive;
    if (e.from != 0 || e.to != 0) return {};
    auto idx = static_cast<std::size_t>(e.label - 1);
    if (seen[idx]) return {};
    seen[idx] = true;
    inverse[idx] = e.tag;
  }
  if (alive != rank) return {};
  return inverse;
}

std::optional<Word> basis_conjugator(const std::vector<Word>& w) {
  if (w.size() < 2) return std::nullopt;
  const Word& w1 = w[0];
  if (w1.size() % 2 == 0) return std::nullopt;
  const std::size_t k = w1.size() / 2;
  if (w1[k] != 1) return std::nullopt;
  Word p = Word::reduce(std::span<const Letter>(w1.letters().data(), k));
  if (p * Word::letter(1) * p.inverse() != w1) return std::nullopt;
  std::optional<int> m;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Letter xi = static_cast<Letter>(i + 1);
    Word u = p.inverse() * w[i] * p;
    int lead = 0;
    std::size_t pos = 0;
    while (pos < u.size() && std::abs(u[pos]) == 1) {
      lead += u[pos] > 0 ? 1 : -1;
      ++pos;
    }
    if (Word::letter(1).power(lead) * Word::letter(xi) * Word::letter(1).power(-lead) != u) return std::nullopt;
    if (m && *m != lead) return std::nullopt;
    m = lead;
  }
  return p * Word::letter(1).power(*m);
}

Automorphism::Automorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  FreeGroup group(rank);
  if (static_cast<int>(images_.size()) != rank) throw Error("automorphism needs one image per generator");
  for (const auto& w : images_) group.check(w);
  inverse_images_ = invert_basis(rank, images_);
  if (inverse_images_.empty()) throw Error("images do not form a basis");
}

Automorphism::Automorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}

Automorphism Automorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::letter(i));
  return Automorphism(rank, images, images);
}

Word Automorphism::apply(const Word& w) const {
  if (w.max_generator() > rank_) throw Error("word rank exceeds automorphism rank");
  return substitute(w, images_);
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  if (inner.rank_ != rank_) throw Error("rank mismatch in composition");
  std::vector<Word> images;
  std::vector<Word> inverse_images;
  for (const auto& w : inner.images_) images.push_back(substitute(w, images_));
  for (const auto& w : inverse_images_) inverse_images.push_back(substitute(w, inner.inverse_images_));
  return Automorphism(rank_, std::move(images), std::move(inverse_images));
}

Automorphism Automorphism::inverse() const { return Automorphism(rank_, inverse_images_, images_); }

}  // namespace outer
