#include "freeman/chain_core.hpp"

#include <algorithm>
#include <numeric>

#include "freeman/error.hpp"
#include "freeman/path_graph.hpp"

namespace freeman {
namespace {

template <typename F>
ChainWord map_letters(const ChainWord& w, F f) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(f(a));
  return ChainWord(std::move(out));
}

std::int64_t left_minus_right(const ChainWord& d) {
  return static_cast<std::int64_t>(d.count(Letter::Up)) -
         static_cast<std::int64_t>(d.count(Letter::Down));
}

}  // namespace

ChainWord rotate(const ChainWord& w, int i) {
  return map_letters(w, [i](Letter a) { return a + i; });
}

ChainWord reflect(const ChainWord& w, int i) {
  return map_letters(w, [i](Letter a) { return letter(i - value(a)); });
}

ChainWord reversed(const ChainWord& w) {
  return ChainWord(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

ChainWord hat(const ChainWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(*it + 2);
  return ChainWord(std::move(out));
}

ChainWord delta(const ChainWord& w) {
  if (w.empty()) throw Error("delta undefined on empty word");
  std::vector<Letter> out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(w[i] - w[i - 1]);
  return ChainWord(std::move(out));
}

CircularWord delta(const CircularWord& c) {
  const ChainWord& w = c.representative();
  if (w.empty()) throw Error("delta undefined on empty word");
  ChainWord d = delta(w);
  d.push_back(w.front() - w.back());
  return CircularWord(std::move(d));
}

ChainWord reduce(const ChainWord& w, Reading reading) {
  // A stack realizes the unique normal form in one pass.
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter a : w) {
    if (!stack.empty() && cancels(stack.back(), a)) {
      stack.pop_back();
    } else {
      stack.push_back(a);
    }
  }
  if (reading == Reading::Circular) {
    std::size_t lo = 0;
    std::size_t hi = stack.size();
    while (hi - lo >= 2 && cancels(stack[lo], stack[hi - 1])) {
      ++lo;
      --hi;
    }
    stack = std::vector<Letter>(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                                stack.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return ChainWord(std::move(stack));
}

std::string TurningNumber::str() const {
  const std::int64_t g = std::gcd(quarter_turns, std::int64_t{4});
  const std::int64_t num = quarter_turns / (g == 0 ? 1 : g);
  const std::int64_t den = 4 / (g == 0 ? 4 : g);
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

TurningNumber turning_number(const ChainWord& w, Reading reading) {
  if (reading == Reading::Circular) {
    if (!is_closed(w)) throw Error("not closed");
    const ChainWord r = reduce(w, Reading::Circular);
    if (r.empty()) return {0};
    return {left_minus_right(delta(CircularWord(r)).representative())};
  }
  const ChainWord r = reduce(w, Reading::Linear);
  if (r.empty()) return {0};
  return {left_minus_right(delta(r))};
}

bool is_closed(const ChainWord& w) {
  return w.count(Letter::Right) == w.count(Letter::Left) &&
         w.count(Letter::Up) == w.count(Letter::Down);
}

bool is_simple(const ChainWord& w) {
  const auto hit = detect_first_intersection(w);
  if (!hit) return true;
  return hit->index == w.size() && is_closed(w);
}

bool is_boundary_word(const ChainWord& w) {
  return w.size() >= 4 && is_closed(w) && is_simple(w);
}

PathTrace trace(const ChainWord& w, Point start) {
  PathTrace t{start, {}};
  t.vertices.reserve(w.size() + 1);
  t.vertices.push_back(start);
  Point p = start;
  for (Letter a : w) {
    p = p + unit(a);
    t.vertices.push_back(p);
  }
  return t;
}

Point displacement(const ChainWord& w) {
  auto c = [&w](Letter a) { return static_cast<std::int64_t>(w.count(a)); };
  return {c(Letter::Right) - c(Letter::Left), c(Letter::Up) - c(Letter::Down)};
}

CircularWord counterclockwise(const CircularWord& c) {
  if (!is_boundary_word(c)) throw Error("not a boundary word");
  const TurningNumber t = turning_number(c.representative(), Reading::Circular);
  if (t.quarter_turns == 4) return c;
  return CircularWord(hat(c.representative()));
}

CornerCount salient_reentrant(const CircularWord& c) {
  const CircularWord d = delta(counterclockwise(c));
  return {static_cast<std::int64_t>(d.representative().count(Letter::Up)),
          static_cast<std::int64_t>(d.representative().count(Letter::Down))};
}

}  // namespace freeman
