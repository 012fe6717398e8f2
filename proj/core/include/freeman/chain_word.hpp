#pragma once

// Freeman chain-code words: the 4-letter alphabet {0,1,2,3} read as unit
// steps right, up, left, down, i.e. the additive group Z/4Z.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freeman {

enum class Letter : std::uint8_t { Right = 0, Up = 1, Left = 2, Down = 3 };

inline constexpr std::array<Letter, 4> kAlphabet{Letter::Right, Letter::Up,
                                                 Letter::Left, Letter::Down};

constexpr int value(Letter a) { return static_cast<int>(a); }

// Reduces any integer modulo 4.
constexpr Letter letter(int v) { return static_cast<Letter>(((v % 4) + 4) % 4); }

constexpr Letter operator+(Letter a, int i) { return letter(value(a) + i); }
// Difference in Z/4Z: the turn taken when going from step `b` to step `a`.
constexpr Letter operator-(Letter a, Letter b) { return letter(value(a) - value(b)); }

constexpr char to_char(Letter a) { return static_cast<char>('0' + value(a)); }

// Steps that undo each other: {02, 20, 13, 31}.
constexpr bool cancels(Letter a, Letter b) { return a - b == Letter::Left; }

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  // Lexicographic: x first, then y.
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
};

constexpr Point unit(Letter a) {
  switch (a) {
    case Letter::Right: return {1, 0};
    case Letter::Up: return {0, 1};
    case Letter::Left: return {-1, 0};
    case Letter::Down: return {0, -1};
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, Point p);

class ChainWord {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  ChainWord() = default;
  explicit ChainWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  ChainWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Parses a string of the digits 0-3; throws freeman::Error otherwise.
  static ChainWord parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  // |w|_a
  std::size_t count(Letter a) const;

  // w[pos .. pos+len)
  ChainWord substr(std::size_t pos, std::size_t len) const;
  // The conjugate starting at letter `k` (taken modulo the length).
  ChainWord rotated_left(std::size_t k) const;

  void push_back(Letter a) { letters_.push_back(a); }
  ChainWord& operator+=(const ChainWord& other);
  friend ChainWord operator+(ChainWord lhs, const ChainWord& rhs) { return lhs += rhs; }

  std::string str() const;

  friend bool operator==(const ChainWord&, const ChainWord&) = default;
  friend auto operator<=>(const ChainWord& a, const ChainWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const ChainWord& w);

// Index of the lexicographically least conjugate of `w` (0 for the empty
// word). Linear time; ties resolve to the smallest index.
std::size_t least_rotation(std::span<const Letter> w);

// A word up to conjugacy. Equality and hashing go through the least
// conjugate, so ⟦0123⟧ == ⟦2301⟧. Closedness is not enforced here because
// first differences of a closed word need not be closed; operations that
// need a closed path check it themselves.
class CircularWord {
 public:
  CircularWord() = default;
  explicit CircularWord(ChainWord representative);

  const ChainWord& representative() const { return representative_; }
  std::size_t canonical_rotation() const { return canonical_rotation_; }
  ChainWord canonical() const { return representative_.rotated_left(canonical_rotation_); }

  std::size_t size() const { return representative_.size(); }
  bool empty() const { return representative_.empty(); }

  friend bool operator==(const CircularWord& a, const CircularWord& b);

 private:
  ChainWord representative_;
  std::size_t canonical_rotation_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CircularWord& c);

inline namespace literals {
inline ChainWord operator""_w(const char* text, std::size_t n) {
  return ChainWord::parse(std::string_view(text, n));
}
}  // namespace literals

}  // namespace freeman

template <>
struct std::hash<freeman::CircularWord> {
  std::size_t operator()(const freeman::CircularWord& c) const noexcept;
};
