#include "freeman/chain_word.hpp"

#include <algorithm>

#include "freeman/error.hpp"

namespace freeman {

std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

ChainWord ChainWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') {
      throw Error("invalid letter '" + std::string(1, c) + "' at position " +
                  std::to_string(i + 1));
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return ChainWord(std::move(letters));
}

std::size_t ChainWord::count(Letter a) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

ChainWord ChainWord::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return ChainWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

ChainWord ChainWord::rotated_left(std::size_t k) const {
  if (letters_.empty()) return {};
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return ChainWord(std::move(out));
}

ChainWord& ChainWord::operator+=(const ChainWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::string ChainWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(to_char(a));
  return s;
}

std::ostream& operator<<(std::ostream& os, const ChainWord& w) { return os << w.str(); }

std::size_t least_rotation(std::span<const Letter> w) {
  // Two candidate starts i < j race letter by letter; the loser of the first
  // mismatch can be skipped past the compared prefix.
  const std::size_t n = w.size();
  if (n < 2) return 0;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = w[(i + k) % n];
    const Letter b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CircularWord::CircularWord(ChainWord representative)
    : representative_(std::move(representative)),
      canonical_rotation_(least_rotation(representative_.letters())) {}

bool operator==(const CircularWord& a, const CircularWord& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a.representative_[(a.canonical_rotation_ + k) % n] !=
        b.representative_[(b.canonical_rotation_ + k) % n]) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const CircularWord& c) {
  return os << "[[" << c.canonical() << "]]";
}

}  // namespace freeman

std::size_t std::hash<freeman::CircularWord>::operator()(
    const freeman::CircularWord& c) const noexcept {
  // FNV-1a over the least conjugate.
  std::size_t h = 1469598103934665603ULL;
  const auto& w = c.representative();
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    h ^= static_cast<std::size_t>(freeman::value(w[(c.canonical_rotation() + k) % n]));
    h *= 1099511628211ULL;
  }
  return h;
}
