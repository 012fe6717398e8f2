#pragma once

// Lyndon factorization (Duval) and Christoffel words.
//
// Words are compared letter by letter with 0 < 1 < 2 < 3.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman {

struct LyndonFactor {
  ChainWord word;
  std::size_t exponent = 1;
  friend bool operator==(const LyndonFactor&, const LyndonFactor&) = default;
};

// w = l1^n1 · l2^n2 ⋯ lk^nk with l1 > l2 > ⋯ > lk, each li Lyndon.
struct LyndonFactorization {
  std::vector<LyndonFactor> factors;

  ChainWord concatenated() const;
  // "(1)^1 (011)^1 (01)^2 (0001)^1 (0)^1"
  std::string str() const;
  friend bool operator==(const LyndonFactorization&, const LyndonFactorization&) = default;
};

// Strictly smaller than each of its proper rotations. Throws on ε.
bool is_lyndon(const ChainWord& w);

// Duval's three-index scan; linear time, constant extra state. Throws on ε.
LyndonFactorization lyndon_factorize(const ChainWord& w);

struct SlopePair {
  std::uint64_t zeros = 0;  // |w|_0
  std::uint64_t ones = 0;   // |w|_1
};

// The lower Christoffel word with `zeros` letters 0 and `ones` letters 1:
// letter i (1-based) is 1 exactly when ⌊i·b/n⌋ > ⌊(i−1)·b/n⌋, b = ones,
// n = zeros + ones. Throws "not primitive" unless gcd(zeros, ones) = 1.
ChainWord christoffel(SlopePair slope);
inline ChainWord christoffel(std::uint64_t zeros, std::uint64_t ones) {
  return christoffel(SlopePair{zeros, ones});
}

// Primitive lower Christoffel word over {0,1}. Single letters qualify.
// Throws on ε or on letters outside {0,1}.
bool is_christoffel(const ChainWord& w);

}  // namespace freeman
