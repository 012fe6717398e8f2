#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace freeman::cli {
namespace {

// Recovers the letters from consecutive vertices.
ChainWord letters_of(const PathTrace& path) {
  std::vector<Letter> out;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const Point d = path.vertices[i] - path.vertices[i - 1];
    for (Letter a : kAlphabet) {
      if (unit(a) == d) out.push_back(a);
    }
  }
  return ChainWord(std::move(out));
}

}  // namespace

std::string render_svg(const PathTrace& path, const RenderOptions& options) {
  const auto& v = path.vertices.empty() ? std::vector<Point>{path.start} : path.vertices;
  const ChainWord w = letters_of(path);
  Point lo = v.front();
  Point hi = v.front();
  for (Point p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const int cs = options.cell_size;
  auto px = [&](double x) { return (x - static_cast<double>(lo.x) + 1.0) * cs; };
  auto py = [&](double y) { return (static_cast<double>(hi.y) - y + 1.0) * cs; };
  const auto width = (hi.x - lo.x + 2) * cs;
  const auto height = (hi.y - lo.y + 2) * cs;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  os << "  <g class=\"grid\" fill=\"#bbb\">\n";
  for (auto y = lo.y; y <= hi.y; ++y) {
    for (auto x = lo.x; x <= hi.x; ++x) {
      os << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1.5\"/>\n";
    }
  }
  os << "  </g>\n";

  if (v.size() > 1) {
    os << "  <polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? " " : "") << px(v[i].x) << ',' << py(v[i].y);
    }
    os << "\"/>\n";
  }
  os << "  <circle class=\"start\" cx=\"" << px(v.front().x) << "\" cy=\"" << py(v.front().y)
     << "\" r=\"4\" fill=\"black\"/>\n";

  const double off = cs * 0.25;
  if (options.labels == EdgeLabels::Letters) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Point n = unit(w[i] + 1);  // left of the step
      os << "  <text class=\"letter\" font-size=\"" << cs / 3 << "\" x=\""
         << px((v[i].x + v[i + 1].x) / 2.0) + off * static_cast<double>(n.x) << "\" y=\""
         << py((v[i].y + v[i + 1].y) / 2.0) - off * static_cast<double>(n.y) << "\">"
         << to_char(w[i]) << "</text>\n";
    }
  } else if (options.labels == EdgeLabels::Delta && !w.empty()) {
    // Turn i sits on the vertex between steps i and i+1; a closed path gets
    // the closing turn on its start vertex.
    std::vector<std::pair<Letter, Point>> turns;
    const ChainWord d = delta(w);
    for (std::size_t i = 0; i < d.size(); ++i) turns.emplace_back(d[i], v[i + 1]);
    if (is_closed(w)) turns.emplace_back(w.front() - w.back(), v.front());
    for (const auto& [turn, at] : turns) {
      os << "  <text class=\"delta\" font-size=\"" << cs / 3 << "\" x=\"" << px(at.x) + off
         << "\" y=\"" << py(at.y) - off << "\">" << to_char(turn) << "</text>\n";
    }
  }

  for (std::size_t c : options.cuts) {
    if (v.size() < 2) break;
    const Point at = v[c % (v.size() - 1)];
    os << "  <rect class=\"cut\" x=\"" << px(at.x) - 4 << "\" y=\"" << py(at.y) - 4
       << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace freeman::cli
