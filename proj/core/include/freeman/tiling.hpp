#pragma once

// Tilings of the plane by translated copies of one polyomino.
//
// A polyomino tiles by translation iff its contour factors circularly as
// X·Y·Z·X̂·Ŷ·Ẑ with at most one empty block (a BN-factorization). One empty
// block makes it a square tile, none a hexagon tile.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman {

struct Block {
  std::size_t offset = 0;  // start position on the canonical representative
  ChainWord word;
};

struct BNFactorization {
  // Sorted, antipodally symmetric positions on the canonical (least
  // conjugate) representative: 4 for squares, 6 for hexagons.
  std::vector<std::size_t> cuts;
  // X, Y, Z starting at cuts[0]; Z is empty for squares.
  std::array<Block, 3> blocks;

  bool is_square() const { return cuts.size() == 4; }
  // X·Y·Z·X̂·Ŷ·Ẑ, the canonical word rotated to start at cuts[0].
  ChainWord reconstruct() const;

  friend bool operator==(const BNFactorization& a, const BNFactorization& b) {
    return a.cuts == b.cuts;
  }
  friend auto operator<=>(const BNFactorization& a, const BNFactorization& b) {
    return a.cuts <=> b.cuts;
  }
};

enum class TileClass { NotExact, Square, Hexagon };

std::string to_string(TileClass t);

// Every distinct factorization (identified by cut set), ordered by cut set.
// Empty for odd-length or non-boundary input. O(n²) table + O(n³) scan.
std::vector<BNFactorization> bn_factorizations(const CircularWord& c);

TileClass classify(const CircularWord& c);
TileClass classify(const std::vector<BNFactorization>& factorizations);

// Number of distinct square factorizations.
std::size_t square_count(const CircularWord& c);

}  // namespace freeman
