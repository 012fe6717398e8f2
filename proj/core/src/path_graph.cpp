#include "freeman/path_graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>

#include "freeman/error.hpp"

namespace freeman {
namespace {

constexpr std::int64_t kMaxCoordinate = std::numeric_limits<std::uint32_t>::max();

int label_of(Point p) { return static_cast<int>(((p.x & 1) << 1) | (p.y & 1)); }

}  // namespace

int QuadNode::depth() const { return std::bit_width(std::max(x, y)); }

Point father_point(Point p) {
  if (p.x == 0 && p.y == 0) throw Error("the root has no father");
  if (p.x < 0 || p.y < 0) throw Error("out of quadrant");
  return {p.x >> 1, p.y >> 1};
}

bool sibling_condition(Point p, Letter e) {
  switch (e) {
    case Letter::Right: return (p.x & 1) == 0;
    case Letter::Left: return (p.x & 1) == 1;
    case Letter::Up: return (p.y & 1) == 0;
    case Letter::Down: return (p.y & 1) == 1;
  }
  return false;
}

QuadGraph::QuadGraph() {
  nodes_.reserve(16);
  const NodeId r = add_node(0, 0, NodeId{});
  nodes_[r.index()].visited = true;
  visited_count_ = 1;
  current_ = r;
  link(r, Letter::Right, child(r, {1, 0}));
  link(r, Letter::Up, child(r, {0, 1}));
}

QuadGraph::QuadGraph(Point start) : QuadGraph() {
  if (start.x < 0 || start.y < 0 || start.x > kMaxCoordinate || start.y > kMaxCoordinate) {
    throw Error("out of quadrant");
  }
  if (start == Point{}) return;
  nodes_[root().index()].visited = false;
  current_ = locate(start);
  nodes_[current_.index()].visited = true;
}

NodeId QuadGraph::add_node(std::uint32_t x, std::uint32_t y, NodeId father) {
  const NodeId id(static_cast<std::uint32_t>(nodes_.size()));
  QuadNode n;
  n.x = x;
  n.y = y;
  n.father = father;
  nodes_.push_back(n);
  return id;
}

NodeId QuadGraph::child(NodeId parent, Point p) {
  const int label = label_of(p);
  const NodeId existing = nodes_[parent.index()].children[label];
  if (existing.valid()) return existing;
  assert(nodes_[parent.index()].point() == father_point(p));
  const NodeId id =
      add_node(static_cast<std::uint32_t>(p.x), static_cast<std::uint32_t>(p.y), parent);
  nodes_[parent.index()].children[label] = id;
  return id;
}

NodeId QuadGraph::locate(Point p) {
  if (p == Point{}) return root();
  return child(locate(father_point(p)), p);
}

std::optional<NodeId> QuadGraph::find(Point p) const {
  if (p.x < 0 || p.y < 0) return std::nullopt;
  if (p == Point{}) return root();
  const int bits = std::bit_width(static_cast<std::uint64_t>(std::max(p.x, p.y)));
  NodeId at = root();
  for (int b = bits - 1; b >= 0; --b) {
    const Point prefix{p.x >> b, p.y >> b};
    if (prefix == Point{}) continue;
    at = nodes_[at.index()].children[label_of(prefix)];
    if (!at.valid()) return std::nullopt;
  }
  return at;
}

void QuadGraph::link(NodeId a, Letter e, NodeId b) {
  nodes_[a.index()].links[value(e)] = b;
  nodes_[b.index()].links[value(e + 2)] = a;
}

NodeId QuadGraph::neighbor(NodeId z, Letter e) {
  const NodeId known = nodes_[z.index()].links[value(e)];
  if (known.valid()) return known;

  const Point p = nodes_[z.index()].point();
  const Point q = p + unit(e);
  if (q.x < 0 || q.y < 0 || q.x > kMaxCoordinate || q.y > kMaxCoordinate) {
    throw Error("out of quadrant");
  }

  NodeId target;
  if (q == Point{}) {
    target = root();
  } else if (z == root()) {
    target = child(root(), q);
  } else {
    const NodeId f = nodes_[z.index()].father;
    const NodeId parent = sibling_condition(p, e) ? f : neighbor(f, e);
    target = child(parent, q);
  }
  link(z, e, target);
  return target;
}

bool QuadGraph::step(Letter e) {
  const NodeId target = neighbor(current_, e);
  QuadNode& n = nodes_[target.index()];
  const bool revisit = n.visited;
  if (!revisit) {
    n.visited = true;
    ++visited_count_;
  }
  current_ = target;
  return revisit;
}

Point normalize(const ChainWord& w) {
  Point p;
  Point lo;
  for (Letter a : w) {
    p = p + unit(a);
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
  }
  return {-lo.x, -lo.y};
}

std::optional<Intersection> detect_first_intersection(const ChainWord& w) {
  const Point start = normalize(w);
  QuadGraph g(start);
  g.reserve(2 * w.size() + 16);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (g.step(w[i])) {
      return Intersection{i + 1, g.node(g.current()).point() - start};
    }
  }
  return std::nullopt;
}

}  // namespace freeman
