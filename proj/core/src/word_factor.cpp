#include "freeman/word_factor.hpp"

#include <numeric>
#include <sstream>

#include "freeman/error.hpp"

namespace freeman {

ChainWord LyndonFactorization::concatenated() const {
  ChainWord out;
  for (const auto& f : factors) {
    for (std::size_t k = 0; k < f.exponent; ++k) out += f.word;
  }
  return out;
}

std::string LyndonFactorization::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << ' ';
    os << '(' << factors[i].word << ")^" << factors[i].exponent;
  }
  return os.str();
}

LyndonFactorization lyndon_factorize(const ChainWord& w) {
  if (w.empty()) throw Error("Lyndon factorization undefined on empty word");
  const std::size_t n = w.size();
  LyndonFactorization out;
  std::size_t i = 0;
  while (i < n) {
    // w[i..k) is a power of a Lyndon word of period j − k, possibly followed
    // by a proper prefix of it.
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    const std::size_t period = j - k;
    const std::size_t repeats = (k - i) / period + 1;
    out.factors.push_back({w.substr(i, period), repeats});
    i += repeats * period;
  }
  return out;
}

bool is_lyndon(const ChainWord& w) {
  const LyndonFactorization f = lyndon_factorize(w);
  return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

ChainWord christoffel(SlopePair slope) {
  if (std::gcd(slope.zeros, slope.ones) != 1) throw Error("not primitive");
  const std::uint64_t n = slope.zeros + slope.ones;
  const std::uint64_t b = slope.ones;
  std::vector<Letter> out;
  out.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    out.push_back((i * b) / n > ((i - 1) * b) / n ? Letter::Up : Letter::Right);
  }
  return ChainWord(std::move(out));
}

bool is_christoffel(const ChainWord& w) {
  if (w.empty()) throw Error("Christoffel test undefined on empty word");
  SlopePair s;
  for (Letter a : w) {
    if (a == Letter::Right) {
      ++s.zeros;
    } else if (a == Letter::Up) {
      ++s.ones;
    } else {
      throw Error("letters outside {0,1}");
    }
  }
  if (std::gcd(s.zeros, s.ones) != 1) return false;
  const std::uint64_t n = w.size();
  for (std::uint64_t i = 1; i <= n; ++i) {
    const bool up = (i * s.ones) / n > ((i - 1) * s.ones) / n;
    if ((w[i - 1] == Letter::Up) != up) return false;
  }
  return true;
}

}  // namespace freeman
