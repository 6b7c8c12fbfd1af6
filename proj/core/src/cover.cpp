#include "outer/cover.hpp"

#include <deque>

#include "outer/error.hpp"

namespace outer {

Cover::Cover(MarkedMetricGraph g) : g_(std::move(g)) {
  for (const auto& loop : g_.loops) paths_.push_back(tighten(loop));
  vertex_paths_.assign(static_cast<std::size_t>(g_.num_vertices), {});
  std::vector<bool> seen(static_cast<std::size_t>(g_.num_vertices), false);
  auto stars = g_.stars();
  std::deque<int> queue{g_.basepoint};
  seen[static_cast<std::size_t>(g_.basepoint)] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (Dir d : stars[static_cast<std::size_t>(v)]) {
      int w = g_.head(d);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      vertex_paths_[static_cast<std::size_t>(w)] = vertex_paths_[static_cast<std::size_t>(v)];
      vertex_paths_[static_cast<std::size_t>(w)].push_back(d);
      queue.push_back(w);
    }
  }
}

TreePoint Cover::lift(int x, const Word& g) const {
  const auto& path = vertex_paths_.at(static_cast<std::size_t>(x));
  return act(g * path_word(g_, path).inverse(), vertex(path));
}

TreePoint Cover::vertex(std::vector<Dir> path) const {
  TreePoint p;
  p.path = tighten(path);
  return p;
}

TreePoint Cover::act(const Word& w, const TreePoint& p) const {
  std::vector<Dir> out;
  auto push = [&](Dir d) {
    if (!out.empty() && out.back() == reverse(d)) {
      out.pop_back();
    } else {
      out.push_back(d);
    }
  };
  for (Letter x : w.letters()) {
    const auto& path = paths_.at(static_cast<std::size_t>(std::abs(x) - 1));
    if (x > 0) {
      for (Dir d : path) push(d);
    } else {
      for (auto it = path.rbegin(); it != path.rend(); ++it) push(reverse(*it));
    }
  }
  for (Dir d : p.path) push(d);
  TreePoint q;
  q.partial = p.partial;
  q.offset = p.offset;
  if (q.partial >= 0 && !out.empty() && out.back() == reverse(q.partial)) {
    q.partial = out.back();
    q.offset = g_.length(q.partial) - q.offset;
    out.pop_back();
  }
  q.path = std::move(out);
  if (q.partial < 0) q.offset = 0;
  return q;
}

std::vector<Cover::Step> Cover::steps(const TreePoint& p) const {
  std::vector<Step> s;
  s.reserve(p.path.size() + 1);
  for (Dir d : p.path) s.push_back({d, g_.length(d)});
  if (p.partial >= 0) s.push_back({p.partial, p.offset});
  return s;
}

Rational Cover::shared(const std::vector<Step>& a, const std::vector<Step>& b) const {
  Rational common = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].dir != b[i].dir) break;
    const Rational& full = g_.length(a[i].dir);
    if (a[i].amount == full && b[i].amount == full) {
      common += full;
      continue;
    }
    common += a[i].amount < b[i].amount ? a[i].amount : b[i].amount;
    break;
  }
  return common;
}

Rational Cover::depth(const TreePoint& p) const {
  Rational d = 0;
  for (Dir x : p.path) d += g_.length(x);
  if (p.partial >= 0) d += p.offset;
  return d;
}

Rational Cover::distance(const TreePoint& p, const TreePoint& q) const {
  auto a = steps(p);
  auto b = steps(q);
  return depth(p) + depth(q) - 2 * shared(a, b);
}

Rational Cover::gromov(const TreePoint& b, const TreePoint& p, const TreePoint& q) const {
  return (distance(b, p) + distance(b, q) - distance(p, q)) / 2;
}

TreePoint Cover::point_at(const std::vector<Step>& s, const Rational& arc) const {
  TreePoint p;
  Rational acc = 0;
  for (const auto& step : s) {
    if (arc == acc) return p;
    if (arc < acc + step.amount || (arc == acc + step.amount && step.amount != g_.length(step.dir))) {
      p.partial = step.dir;
      p.offset = arc - acc;
      return p;
    }
    acc += step.amount;
    p.path.push_back(step.dir);
  }
  if (arc != acc) throw InternalError("arc length beyond the end of the path");
  return p;
}

TreePoint Cover::along(const TreePoint& p, const TreePoint& q, const Rational& t) const {
  auto a = steps(p);
  auto b = steps(q);
  Rational common = shared(a, b);
  Rational dp = depth(p);
  Rational dq = depth(q);
  if (t < 0 || t > dp + dq - 2 * common) throw Error("parameter outside the geodesic");
  if (t <= dp - common) return point_at(a, dp - t);
  return point_at(b, common + (t - (dp - common)));
}

std::vector<Piece> Cover::geodesic(const TreePoint& p, const TreePoint& q) const {
  auto a = steps(p);
  auto b = steps(q);
  Rational common = shared(a, b);
  std::vector<Piece> out;
  // Up from p to the branch point, then down to q.
  std::vector<Piece> up;
  Rational acc = 0;
  for (const auto& s : a) {
    Rational lo = acc > common ? acc : common;
    Rational hi = acc + s.amount;
    if (hi > lo) {
      const Rational& len = g_.length(s.dir);
      up.push_back({reverse(s.dir), len - (hi - acc), len - (lo - acc)});
    }
    acc += s.amount;
  }
  out.assign(up.rbegin(), up.rend());
  acc = 0;
  for (const auto& s : b) {
    Rational lo = acc > common ? acc : common;
    Rational hi = acc + s.amount;
    if (hi > lo) out.push_back({s.dir, lo - acc, hi - acc});
    acc += s.amount;
  }
  return out;
}

GraphPoint Cover::project(const TreePoint& p) const {
  GraphPoint x;
  if (p.partial >= 0) {
    x.dir = p.partial;
    x.offset = p.offset;
    return x;
  }
  x.vertex = p.path.empty() ? g_.basepoint : g_.head(p.path.back());
  return x;
}

}  // namespace outer
