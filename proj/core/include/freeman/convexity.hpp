#pragma once

// Digital convexity of polyomino contours.
//
// A counterclockwise contour is cut at its four extremal points W, S, E, N.
// Each arc, reversed and rotated into the {0,1} frame, must be NW-convex, which holds
// exactly when every factor of its Lyndon factorization is a primitive
// Christoffel word.

#include <array>
#include <span>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman {

struct HullChain {
  std::vector<Point> vertices;
};

struct ConvexHull {
  HullChain upper;  // clockwise, lowest vertex to highest
  HullChain lower;  // clockwise, highest vertex to lowest
};

// Monotone chain over the lexicographic order; collinear points are dropped.
// Throws on an empty set.
ConvexHull convex_hull(std::span<const Point> points);

// Lyndon factors of v are all Christoffel words (true for ε). Throws on
// letters outside {0,1}.
bool is_nw_convex(const ChainWord& v);

struct ExtremalSplit {
  Point west;
  Point south;
  Point east;
  Point north;
  // W→S, S→E, E→N, N→W along the counterclockwise contour.
  std::array<ChainWord, 4> arcs;
};

// Throws "not a boundary word". Orientation is normalized to counterclockwise
// first; the trace starts at (0,0) on the normalized representative.
ExtremalSplit split_extremal(const CircularWord& c);

// Rotation ρ^k taking arc i (0-based, W→S first) into the {0,1} frame.
constexpr std::array<int, 4> kArcFrameRotation{1, 0, 3, 2};

// Arc i reversed, then rotated by kArcFrameRotation[i]: a {0,1}-word on a
// convex contour, with the exterior above and to the left of its path.
ChainWord framed_arc(const ExtremalSplit& split, std::size_t i);

// Throws "not a boundary word".
bool is_digitally_convex(const CircularWord& c);

// Cells enclosed by a boundary word traced from (0,0); cell (i, j) is the
// unit square [i, i+1] × [j, j+1]. Throws "not a boundary word".
std::vector<Point> enclosed_cells(const CircularWord& c);

// Brute-force cross-check of is_digitally_convex: fills the enclosed cells,
// takes the convex hull of their (integer) indices and reports whether every
// lattice point in that hull is an enclosed cell. O(area · hull size).
bool convexity_oracle(const CircularWord& c);

}  // namespace freeman
