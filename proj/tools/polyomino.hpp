#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "freeman/chain_word.hpp"

namespace freeman::cli {

// Counterclockwise contour of a cell set, starting at the lower-left corner
// of its lexicographically least cell. The set must be 4-connected with a
// simple contour (no holes, no diagonal-only contacts); throws otherwise.
CircularWord boundary_of_cells(std::span<const Point> cells);

// Grows a polyomino from one cell by repeatedly adding a uniformly chosen
// perimeter cell, skipping cells whose addition would create a hole or a
// diagonal pinch. Deterministic for a fixed seed.
CircularWord gen_random_polyomino(std::size_t cells, std::uint64_t seed);

}  // namespace freeman::cli
