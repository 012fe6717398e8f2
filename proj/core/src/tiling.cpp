#include "freeman/tiling.hpp"

#include <algorithm>

#include "freeman/chain_core.hpp"

namespace freeman {

std::string to_string(TileClass t) {
  switch (t) {
    case TileClass::NotExact: return "not-exact";
    case TileClass::Square: return "square";
    case TileClass::Hexagon: return "hexagon";
  }
  return "unknown";
}

ChainWord BNFactorization::reconstruct() const {
  const auto& [x, y, z] = blocks;
  return x.word + y.word + z.word + hat(x.word) + hat(y.word) + hat(z.word);
}

std::vector<BNFactorization> bn_factorizations(const CircularWord& c) {
  if (c.size() % 2 != 0 || !is_boundary_word(c)) return {};
  const ChainWord w = c.canonical();
  const std::size_t n = w.size();
  const std::size_t half = n / 2;
  auto at = [&](std::size_t i) { return w[i % n]; };

  // matches[len][p]: the arc of length len at p has its hat at p + n/2.
  std::vector<std::vector<char>> matches(half + 1, std::vector<char>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    matches[0][p] = 1;
    if (half >= 1) matches[1][p] = at(p + half) == at(p) + 2;
  }
  for (std::size_t len = 2; len <= half; ++len) {
    for (std::size_t p = 0; p < n; ++p) {
      matches[len][p] = matches[len - 2][(p + 1) % n] && at(p + half) == at(p + len - 1) + 2 &&
                        at(p + half + len - 1) == at(p) + 2;
    }
  }

  std::vector<BNFactorization> out;
  for (std::size_t s = 0; s < half; ++s) {
    for (std::size_t a = 0; a <= half; ++a) {
      if (!matches[a][s]) continue;
      for (std::size_t b = 0; a + b <= half; ++b) {
        const std::size_t rest = half - a - b;
        if ((a == 0) + (b == 0) + (rest == 0) > 1) continue;
        if (!matches[b][(s + a) % n] || !matches[rest][(s + a + b) % n]) continue;

        std::vector<std::size_t> cuts{s, s + a, s + a + b, s + half, s + half + a,
                                      s + half + a + b};
        for (auto& p : cuts) p %= n;
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        BNFactorization f;
        f.cuts = std::move(cuts);
        const std::size_t k = f.cuts.size() / 2;
        for (std::size_t i = 0; i < 3; ++i) {
          const std::size_t from = i < k ? f.cuts[i] : f.cuts[k];
          const std::size_t to = i < k ? f.cuts[i + 1] : f.cuts[k];
          f.blocks[i] = Block{from, w.substr(from, to - from)};
        }
        out.push_back(std::move(f));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TileClass classify(const std::vector<BNFactorization>& factorizations) {
  if (factorizations.empty()) return TileClass::NotExact;
  const bool square = std::any_of(factorizations.begin(), factorizations.end(),
                                  [](const BNFactorization& f) { return f.is_square(); });
  return square ? TileClass::Square : TileClass::Hexagon;
}

TileClass classify(const CircularWord& c) { return classify(bn_factorizations(c)); }

std::size_t square_count(const CircularWord& c) {
  const auto all = bn_factorizations(c);
  return static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [](const BNFactorization& f) { return f.is_square(); }));
}

}  // namespace freeman
