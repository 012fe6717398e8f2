#pragma once

// Chain-code algebra: letter transforms, first differences, reduction,
// turning number, closed/simple predicates and geometric realization.

#include <cstdint>
#include <string>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman {

// ρ^i : a ↦ a + i, extended letterwise.
ChainWord rotate(const ChainWord& w, int i);
// σ_i : a ↦ i − a, extended letterwise.
ChainWord reflect(const ChainWord& w, int i);
ChainWord reversed(const ChainWord& w);
// ŵ = ρ²(reverse(w)): the same path traversed backwards.
ChainWord hat(const ChainWord& w);

// Successive differences (w2−w1)(w3−w2)…; throws on the empty word.
ChainWord delta(const ChainWord& w);
// delta(w) followed by the closing turn w1 − wn; throws on the empty word.
CircularWord delta(const CircularWord& c);

enum class Reading { Linear, Circular };

// Normal form after deleting cancelling factors 02, 20, 13, 31. With
// Reading::Circular, cancellation also runs across the seam.
ChainWord reduce(const ChainWord& w, Reading reading = Reading::Linear);

// Stored as quarter turns (|Δ|_1 − |Δ|_3 of the reduced word); T itself is
// quarter_turns / 4.
struct TurningNumber {
  std::int64_t quarter_turns = 0;

  bool is_integral() const { return quarter_turns % 4 == 0; }
  double value() const { return static_cast<double>(quarter_turns) / 4.0; }
  // "1", "-1", "3/4", "-1/2", ...
  std::string str() const;

  friend bool operator==(const TurningNumber&, const TurningNumber&) = default;
};

// Reading::Circular requires a closed word and throws "not closed" otherwise.
TurningNumber turning_number(const ChainWord& w, Reading reading);

bool is_closed(const ChainWord& w);
// No lattice point visited twice, except the final return to the start of a
// closed path.
bool is_simple(const ChainWord& w);
// Closed, simple and non-degenerate (|w| ≥ 4): the contour of a polyomino.
bool is_boundary_word(const ChainWord& w);
inline bool is_boundary_word(const CircularWord& c) {
  return is_boundary_word(c.representative());
}

struct PathTrace {
  Point start;
  std::vector<Point> vertices;  // |w| + 1 points, vertices[0] == start
};

PathTrace trace(const ChainWord& w, Point start = {});
// (|w|_0 − |w|_2, |w|_1 − |w|_3)
Point displacement(const ChainWord& w);

// The counterclockwise representative of a boundary word: `c` itself when its
// turning number is +1, its hat when it is −1. Throws "not a boundary word".
CircularWord counterclockwise(const CircularWord& c);

struct CornerCount {
  std::int64_t salient = 0;
  std::int64_t reentrant = 0;
  friend bool operator==(const CornerCount&, const CornerCount&) = default;
};

// Left turns (salient) and right turns (reentrant) of the counterclockwise
// contour. Throws "not a boundary word".
CornerCount salient_reentrant(const CircularWord& c);

}  // namespace freeman
