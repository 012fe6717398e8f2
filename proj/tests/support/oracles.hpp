#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the code path they are checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman::oracle {

inline Point step(Point p, Letter a) {
  static constexpr int dx[4] = {1, 0, -1, 0};
  static constexpr int dy[4] = {0, 1, 0, -1};
  return {p.x + dx[value(a)], p.y + dy[value(a)]};
}

struct Revisit {
  std::size_t index;
  Point point;
};

// Hash-set walk from (0,0).
inline std::optional<Revisit> first_revisit(const ChainWord& w) {
  struct Hash {
    std::size_t operator()(const Point& p) const {
      return std::hash<std::int64_t>()(p.x * 1000003 + p.y);
    }
  };
  std::unordered_set<Point, Hash> seen{{0, 0}};
  Point p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    p = step(p, w[i]);
    if (!seen.insert(p).second) return Revisit{i + 1, p};
  }
  return std::nullopt;
}

// Repeated full scans deleting the leftmost (or rightmost) cancelling
// factor; circular mode also cancels first/last letters.
inline ChainWord reduce_by_scanning(const ChainWord& w, bool circular, bool rightmost = false) {
  std::vector<Letter> v(w.begin(), w.end());
  auto cancel = [](Letter a, Letter b) { return (value(a) + 2) % 4 == value(b); };
  for (bool changed = true; changed;) {
    changed = false;
    if (v.size() >= 2) {
      if (!rightmost) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
          if (cancel(v[i], v[i + 1])) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i + 2));
            changed = true;
            break;
          }
        }
      } else {
        for (std::size_t i = v.size() - 1; i >= 1; --i) {
          if (cancel(v[i - 1], v[i])) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i - 1), v.begin() + static_cast<std::ptrdiff_t>(i + 1));
            changed = true;
            break;
          }
        }
      }
    }
    if (!changed && circular && v.size() >= 2 && cancel(v.back(), v.front())) {
      v.pop_back();
      v.erase(v.begin());
      changed = true;
    }
  }
  return ChainWord(std::move(v));
}

inline ChainWord rotation(const ChainWord& w, std::size_t k) {
  std::vector<Letter> v;
  for (std::size_t i = 0; i < w.size(); ++i) v.push_back(w[(i + k) % w.size()]);
  return ChainWord(std::move(v));
}

// Strictly smaller than every proper rotation.
inline bool is_lyndon(const ChainWord& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!(w < rotation(w, k))) return false;
  }
  return true;
}

// Greedy longest Lyndon prefix, then runs of equal factors merged.
inline std::vector<std::pair<ChainWord, std::size_t>> lyndon_factors(const ChainWord& w) {
  std::vector<std::pair<ChainWord, std::size_t>> out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t len = 1;
    for (std::size_t l = w.size() - i; l >= 1; --l) {
      ChainWord prefix(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(i),
                                           w.begin() + static_cast<std::ptrdiff_t>(i + l)));
      if (oracle::is_lyndon(prefix)) {
        len = l;
        break;
      }
    }
    ChainWord f(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(i),
                                    w.begin() + static_cast<std::ptrdiff_t>(i + len)));
    if (!out.empty() && out.back().first == f) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(f), 1);
    }
    i += len;
  }
  return out;
}

// NW-convexity straight from the definition: no lattice point strictly above
// the path and on or below its upper convex hull. The hull height at column
// x is the best interpolation over all vertex pairs straddling x.
inline bool nw_convex_by_hull_gap(const ChainWord& v) {
  std::vector<Point> pts{{0, 0}};
  for (Letter a : v) pts.push_back(step(pts.back(), a));
  const std::int64_t width = pts.back().x;
  for (std::int64_t x = 0; x <= width; ++x) {
    std::int64_t top = -1;
    for (Point p : pts) {
      if (p.x == x) top = std::max(top, p.y);
    }
    // Lattice point (x, top+1) under the hull?
    const std::int64_t y = top + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i; j < pts.size(); ++j) {
        const Point p = pts[i];
        const Point q = pts[j];
        if (!(p.x <= x && x <= q.x)) continue;
        bool covers;
        if (p.x == q.x) {
          covers = y <= std::max(p.y, q.y);
        } else {
          covers = (y - p.y) * (q.x - p.x) <= (q.y - p.y) * (x - p.x);
        }
        if (covers) return false;
      }
    }
  }
  return true;
}

// Every closed self-avoiding lattice polygon of perimeter `length`, rooted at
// the origin, both orientations, as chain words.
inline std::vector<ChainWord> boundary_words_of_length(std::size_t length) {
  std::vector<ChainWord> out;
  if (length < 4 || length % 2) return out;
  const std::int64_t r = static_cast<std::int64_t>(length);
  const std::int64_t side = 2 * r + 1;
  std::vector<char> seen(static_cast<std::size_t>(side * side), 0);
  auto cell = [&](Point p) -> char& {
    return seen[static_cast<std::size_t>((p.y + r) * side + (p.x + r))];
  };
  std::vector<Letter> word;
  std::function<void(Point)> dfs = [&](Point p) {
    const std::size_t left = length - word.size();
    if (std::abs(p.x) + std::abs(p.y) > static_cast<std::int64_t>(left)) return;
    if (left == 0) {
      if (p == Point{}) out.emplace_back(word);
      return;
    }
    for (Letter a : kAlphabet) {
      const Point q = step(p, a);
      if (q == Point{}) {
        if (left == 1) {
          word.push_back(a);
          out.emplace_back(word);
          word.pop_back();
        }
        continue;
      }
      if (cell(q)) continue;
      cell(q) = 1;
      word.push_back(a);
      dfs(q);
      word.pop_back();
      cell(q) = 0;
    }
  };
  cell({0, 0}) = 1;
  dfs({0, 0});
  return out;
}

inline std::vector<ChainWord> boundary_words_up_to(std::size_t max_length) {
  std::vector<ChainWord> all;
  for (std::size_t n = 4; n <= max_length; n += 2) {
    auto words = boundary_words_of_length(n);
    all.insert(all.end(), words.begin(), words.end());
  }
  return all;
}

// Salient / reentrant counts from the cell set alone: a grid vertex touched
// by exactly one cell is a salient corner, by exactly three a reentrant one.
inline std::pair<std::int64_t, std::int64_t> corner_counts(const std::vector<Point>& cells) {
  std::set<Point> in(cells.begin(), cells.end());
  std::map<Point, int> touch;
  for (Point c : cells) {
    for (int dx = 0; dx <= 1; ++dx) {
      for (int dy = 0; dy <= 1; ++dy) ++touch[{c.x + dx, c.y + dy}];
    }
  }
  std::int64_t s = 0;
  std::int64_t r = 0;
  for (const auto& [v, k] : touch) {
    if (k == 1) ++s;
    if (k == 3) ++r;
  }
  return {s, r};
}

// Antipodal cut sets (positions on `w` itself) for which every arc between
// consecutive cuts reads, at its antipode, as ρ²(reverse(arc)). `k` = 2 gives
// squares, 3 gives hexagons.
inline std::set<std::vector<std::size_t>> bn_cut_sets(const ChainWord& w, int k) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = w.size();
  if (n % 2) return out;
  const std::size_t h = n / 2;
  auto arc_ok = [&](std::size_t from, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j) {
      const Letter a = w[(from + h + j) % n];
      const Letter b = w[(from + len - 1 - j) % n];
      if (value(a) != (value(b) + 2) % 4) return false;
    }
    return true;
  };
  auto consider = [&](std::vector<std::size_t> first_half) {
    std::vector<std::size_t> cuts = first_half;
    for (auto c : first_half) cuts.push_back(c + h);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const std::size_t from = cuts[i];
      const std::size_t to = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + n;
      if (!arc_ok(from, to - from)) return;
    }
    out.insert(cuts);
  };
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = a + 1; b < h; ++b) {
      if (k == 2) {
        consider({a, b});
        continue;
      }
      for (std::size_t c = b + 1; c < h; ++c) consider({a, b, c});
    }
  }
  return out;
}

inline ChainWord random_word(std::mt19937_64& rng, std::size_t length, int alphabet = 4) {
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  std::vector<Letter> v(length);
  for (auto& a : v) a = static_cast<Letter>(d(rng));
  return ChainWord(std::move(v));
}

// All words of a given length over {0, .., alphabet-1}, in lexicographic
// order, passed one at a time to `f`.
template <typename F>
void for_each_word(std::size_t length, int alphabet, F f) {
  std::vector<Letter> v(length, Letter::Right);
  while (true) {
    f(ChainWord(v));
    std::size_t i = length;
    while (i > 0 && value(v[i - 1]) == alphabet - 1) {
      v[i - 1] = Letter::Right;
      --i;
    }
    if (i == 0) return;
    v[i - 1] = v[i - 1] + 1;
  }
}

}  // namespace freeman::oracle
