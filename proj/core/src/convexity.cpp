#include "freeman/convexity.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "freeman/chain_core.hpp"
#include "freeman/error.hpp"
#include "freeman/word_factor.hpp"

namespace freeman {
namespace {

std::int64_t cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Keeps only clockwise (right) turns.
template <typename It>
std::vector<Point> clockwise_chain(It first, It last) {
  std::vector<Point> h;
  for (It it = first; it != last; ++it) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), *it) >= 0) h.pop_back();
    h.push_back(*it);
  }
  return h;
}

}  // namespace

ConvexHull convex_hull(std::span<const Point> points) {
  if (points.empty()) throw Error("convex hull of an empty set");
  std::vector<Point> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  ConvexHull hull;
  hull.upper.vertices = clockwise_chain(p.begin(), p.end());
  hull.lower.vertices = clockwise_chain(p.rbegin(), p.rend());
  return hull;
}

bool is_nw_convex(const ChainWord& v) {
  for (Letter a : v) {
    if (a != Letter::Right && a != Letter::Up) throw Error("letters outside {0,1}");
  }
  if (v.empty()) return true;
  const LyndonFactorization f = lyndon_factorize(v);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const LyndonFactor& l) { return is_christoffel(l.word); });
}

ExtremalSplit split_extremal(const CircularWord& c) {
  const ChainWord w = counterclockwise(c).representative();
  const std::size_t n = w.size();
  std::vector<Point> v = trace(w).vertices;
  v.pop_back();

  auto pick = [&v](auto better) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (better(v[i], v[best])) best = i;
    }
    return best;
  };
  const std::size_t iw = pick([](Point a, Point b) { return a < b; });
  const std::size_t is = pick([](Point a, Point b) { return a.y < b.y || (a.y == b.y && a.x > b.x); });
  const std::size_t ie = pick([](Point a, Point b) { return a > b; });
  const std::size_t in = pick([](Point a, Point b) { return a.y > b.y || (a.y == b.y && a.x < b.x); });

  auto offset = [&](std::size_t i) { return (i + n - iw) % n; };
  const std::size_t s = offset(is);
  const std::size_t e = offset(ie);
  const std::size_t m = offset(in);
  if (!(s <= e && e <= m)) throw Error("extremal points out of counterclockwise order");

  const ChainWord from_west = w.rotated_left(iw);
  ExtremalSplit out;
  out.west = v[iw];
  out.south = v[is];
  out.east = v[ie];
  out.north = v[in];
  out.arcs = {from_west.substr(0, s), from_west.substr(s, e - s), from_west.substr(e, m - e),
              from_west.substr(m, n - m)};
  return out;
}

ChainWord framed_arc(const ExtremalSplit& split, std::size_t i) {
  return rotate(reversed(split.arcs.at(i)), kArcFrameRotation.at(i));
}

bool is_digitally_convex(const CircularWord& c) {
  const ExtremalSplit split = split_extremal(c);
  for (std::size_t i = 0; i < 4; ++i) {
    const ChainWord framed = framed_arc(split, i);
    const bool binary = std::all_of(framed.begin(), framed.end(), [](Letter a) {
      return a == Letter::Right || a == Letter::Up;
    });
    if (!binary || !is_nw_convex(framed)) return false;
  }
  return true;
}

std::vector<Point> enclosed_cells(const CircularWord& c) {
  if (!is_boundary_word(c)) throw Error("not a boundary word");
  // Row j collects the abscissae of vertical edges spanning [j, j+1]; cells
  // lie between consecutive pairs.
  std::map<std::int64_t, std::vector<std::int64_t>> rows;
  Point p;
  for (Letter a : c.representative()) {
    const Point q = p + unit(a);
    if (a == Letter::Up || a == Letter::Down) rows[std::min(p.y, q.y)].push_back(p.x);
    p = q;
  }
  std::vector<Point> cells;
  for (auto& [row, xs] : rows) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      for (std::int64_t x = xs[k]; x < xs[k + 1]; ++x) cells.push_back({x, row});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool convexity_oracle(const CircularWord& c) {
  const std::vector<Point> cells = enclosed_cells(c);
  const ConvexHull hull = convex_hull(cells);

  // Closed clockwise polygon: upper chain then lower chain without repeats.
  std::vector<Point> polygon = hull.upper.vertices;
  for (std::size_t i = 1; i + 1 < hull.lower.vertices.size(); ++i) {
    polygon.push_back(hull.lower.vertices[i]);
  }

  Point lo = cells.front();
  Point hi = cells.front();
  for (Point q : cells) {
    lo.y = std::min(lo.y, q.y);
    hi.y = std::max(hi.y, q.y);
  }
  lo.x = cells.front().x;
  hi.x = cells.back().x;
  const std::int64_t width = hi.x - lo.x + 1;
  std::vector<bool> filled(static_cast<std::size_t>(width * (hi.y - lo.y + 1)), false);
  for (Point q : cells) filled[static_cast<std::size_t>((q.y - lo.y) * width + (q.x - lo.x))] = true;

  for (std::int64_t y = lo.y; y <= hi.y; ++y) {
    for (std::int64_t x = lo.x; x <= hi.x; ++x) {
      const Point q{x, y};
      bool inside = true;
      for (std::size_t i = 0; i < polygon.size() && inside; ++i) {
        inside = cross(polygon[i], polygon[(i + 1) % polygon.size()], q) <= 0;
      }
      if (inside && !filled[static_cast<std::size_t>((y - lo.y) * width + (x - lo.x))]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace freeman
