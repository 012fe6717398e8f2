#pragma once

// Radix quadtree over N×N with lazily created neighbor links.
//
// Every pair (x, y) of nonnegative integers sits at exactly one node: the
// child of (⌊x/2⌋, ⌊y/2⌋) labeled (x mod 2, y mod 2). The root (0,0) has no
// (0,0) child. Moving a cursor by one unit step goes through the father
// (the two nodes are siblings, or their fathers are neighbors), so a path of
// length n is checked for self-intersection with O(n) node creations and
// memoized links instead of hashing or sorting.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "freeman/chain_word.hpp"

namespace freeman {

class NodeId {
 public:
  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t index) : index_(index) {}
  constexpr std::uint32_t index() const { return index_; }
  constexpr bool valid() const { return index_ != kNone; }
  friend constexpr bool operator==(NodeId, NodeId) = default;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::uint32_t index_ = kNone;
};

struct QuadNode {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  NodeId father;
  std::array<NodeId, 4> children;  // indexed by 2·α + β for label (α, β)
  std::array<NodeId, 4> links;     // indexed by letter
  bool visited = false;

  Point point() const { return {x, y}; }
  // Bit length of the labels, |x| = |y| = k (0 for the root).
  int depth() const;
};

// Drops the last binary digit of each coordinate. Throws on the root.
Point father_point(Point p);

// True iff p and p + unit(e) share a father, i.e. the last bit of the moving
// coordinate permits the step without carry: (e=0, x even), (e=2, x odd),
// (e=1, y even), (e=3, y odd). Otherwise father(p) + unit(e) is the father of
// p + unit(e).
bool sibling_condition(Point p, Letter e);

class QuadGraph {
 public:
  // Root (0,0) visited and current. Its neighbors (1,0) and (0,1) exist
  // unvisited with links from the root.
  QuadGraph();
  // Same initial graph, with the cursor placed on `start` instead (nodes on
  // the way created unvisited; the root is unmarked unless start is (0,0)).
  explicit QuadGraph(Point start);

  NodeId root() const { return NodeId(0); }
  NodeId current() const { return current_; }
  const QuadNode& node(NodeId id) const { return nodes_[id.index()]; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t visited_count() const { return visited_count_; }

  // Existing node at p, if any.
  std::optional<NodeId> find(Point p) const;

  // Moves the cursor by one letter, creating missing nodes and memoizing the
  // link in both directions. Marks the target visited and returns whether it
  // already was. Throws "out of quadrant" for moves leaving N×N.
  bool step(Letter e);

  void reserve(std::size_t nodes) { nodes_.reserve(nodes); }

 private:
  NodeId add_node(std::uint32_t x, std::uint32_t y, NodeId father);
  NodeId child(NodeId parent, Point p);
  NodeId locate(Point p);
  NodeId neighbor(NodeId z, Letter e);
  void link(NodeId a, Letter e, NodeId b);

  std::vector<QuadNode> nodes_;
  NodeId current_;
  std::size_t visited_count_ = 0;
};

// Translation putting the whole trace of `w` (started at the origin) into N×N:
// (−min x, −min y).
Point normalize(const ChainWord& w);

struct Intersection {
  std::size_t index = 0;  // 1-based letter whose endpoint was already visited
  Point point;            // that endpoint, in the frame where w starts at (0,0)
  friend bool operator==(const Intersection&, const Intersection&) = default;
};

// First revisited lattice point along w, if any. The final return of a
// closed path to its start is reported like any other revisit.
std::optional<Intersection> detect_first_intersection(const ChainWord& w);

}  // namespace freeman
