#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freeman/chain_core.hpp"

namespace freeman::cli {

enum class EdgeLabels { None, Letters, Delta };

struct RenderOptions {
  EdgeLabels labels = EdgeLabels::None;
  // Positions (letter indices) to mark, e.g. BN-factorization cuts.
  std::vector<std::size_t> cuts;
  int cell_size = 32;
};

// Standalone SVG: grid dots over the bounding box, the path as a polyline, a
// start marker, optional labels (letters on edges; first differences on the
// vertices where the turns happen) and cut markers.
std::string render_svg(const PathTrace& path, const RenderOptions& options = {});

}  // namespace freeman::cli
