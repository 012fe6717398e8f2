#include "polyomino.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "freeman/error.hpp"

namespace freeman::cli {
namespace {

std::uint64_t key(Point p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}

class CellSet {
 public:
  bool contains(Point p) const { return cells_.count(key(p)) != 0; }
  void insert(Point p) { cells_.insert(key(p)); }
  std::size_t size() const { return cells_.size(); }

 private:
  std::unordered_set<std::uint64_t> cells_;
};

// Adding `c` keeps the contour simple iff the part of c's boundary already
// touching the polyomino is one proper arc. Ring order: E, NE, N, NW, W, SW,
// S, SE (edges at even positions, corners at odd ones).
bool keeps_contour_simple(const CellSet& set, Point c) {
  auto occ = [&](std::int64_t dx, std::int64_t dy) { return set.contains({c.x + dx, c.y + dy}); };
  const bool e = occ(1, 0), n = occ(0, 1), w = occ(-1, 0), s = occ(0, -1);
  const std::array<bool, 8> ring{e, e || n || occ(1, 1),  n, n || w || occ(-1, 1),
                                 w, w || s || occ(-1, -1), s, s || e || occ(1, -1)};
  int runs = 0;
  int touched = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    touched += ring[i];
    if (ring[i] && !ring[(i + 7) % 8]) ++runs;
  }
  return runs == 1 && touched < 8;
}

}  // namespace

CircularWord boundary_of_cells(std::span<const Point> cells) {
  if (cells.empty()) throw Error("empty cell set");
  CellSet set;
  for (Point p : cells) set.insert(p);

  // Counterclockwise edges around each cell that face an empty neighbor.
  std::unordered_map<std::uint64_t, Letter> out_edge;
  std::size_t edges = 0;
  auto add_edge = [&](Point from, Letter a) {
    if (!out_edge.emplace(key(from), a).second) throw Error("contour touches itself");
    ++edges;
  };
  for (Point p : cells) {
    if (!set.contains({p.x, p.y - 1})) add_edge({p.x, p.y}, Letter::Right);
    if (!set.contains({p.x + 1, p.y})) add_edge({p.x + 1, p.y}, Letter::Up);
    if (!set.contains({p.x, p.y + 1})) add_edge({p.x + 1, p.y + 1}, Letter::Left);
    if (!set.contains({p.x - 1, p.y})) add_edge({p.x, p.y + 1}, Letter::Down);
  }

  const Point start = *std::min_element(cells.begin(), cells.end());
  std::vector<Letter> word;
  word.reserve(edges);
  Point at = start;
  do {
    const auto it = out_edge.find(key(at));
    if (it == out_edge.end() || word.size() > edges) throw Error("open contour");
    word.push_back(it->second);
    at = at + unit(it->second);
  } while (at != start);
  if (word.size() != edges) throw Error("cell set has more than one contour");
  return CircularWord(ChainWord(std::move(word)));
}

CircularWord gen_random_polyomino(std::size_t cells, std::uint64_t seed) {
  if (cells == 0) throw Error("a polyomino needs at least one cell");
  std::mt19937_64 rng(seed);
  CellSet set;
  std::vector<Point> placed;
  std::vector<Point> frontier;
  std::unordered_map<std::uint64_t, std::size_t> slot;

  auto place = [&](Point c) {
    set.insert(c);
    placed.push_back(c);
    for (Letter a : kAlphabet) {
      const Point q = c + unit(a);
      if (!set.contains(q) && slot.emplace(key(q), frontier.size()).second) frontier.push_back(q);
    }
  };
  auto swap_slots = [&](std::size_t i, std::size_t j) {
    std::swap(frontier[i], frontier[j]);
    slot[key(frontier[i])] = i;
    slot[key(frontier[j])] = j;
  };

  place({0, 0});
  while (placed.size() < cells) {
    // Uniform draws without replacement until an admissible cell turns up;
    // one always exists (e.g. above the leftmost top cell).
    const std::size_t m = frontier.size();
    bool grown = false;
    for (std::size_t t = 0; t < m && !grown; ++t) {
      std::uniform_int_distribution<std::size_t> pick(0, m - 1 - t);
      swap_slots(pick(rng), m - 1 - t);
      const Point c = frontier[m - 1 - t];
      if (!keeps_contour_simple(set, c)) continue;
      swap_slots(m - 1 - t, m - 1);
      frontier.pop_back();
      slot.erase(key(c));
      place(c);
      grown = true;
    }
    if (!grown) throw Error("no admissible perimeter cell");
  }
  return boundary_of_cells(placed);
}

}  // namespace freeman::cli
