#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "petalgrid/grid.hpp"

namespace petalgrid {
namespace {

// Traversal-ordered (from, to) node pairs; falls back to stored edge order.
std::vector<std::pair<int, int>> oriented_edges(const GridDiagram& g) {
  std::vector<std::pair<int, int>> out;
  const auto& t = g.traversal;
  if (t.size() == g.nodes.size() && !t.empty()) {
    for (std::size_t i = 0; i < t.size(); ++i) out.emplace_back(t[i], t[(i + 1) % t.size()]);
    return out;
  }
  for (const GridEdge& e : g.vertical) out.emplace_back(e.a, e.b);
  for (const GridEdge& e : g.horizontal) out.emplace_back(e.a, e.b);
  return out;
}

}  // namespace

std::string render_ascii(const GridDiagram& g) {
  const int p = g.size;
  const int side = 2 * p + 1;
  std::vector<std::string> canvas(side, std::string(side, ' '));
  auto col = [](int x) { return 2 * x - 1; };
  auto row = [p](int y) { return 2 * (p - y) + 1; };

  for (const GridEdge& e : g.horizontal) {
    const GridPoint a = g.nodes[e.a];
    const GridPoint b = g.nodes[e.b];
    const int r = row(a.y);
    for (int c = col(std::min(a.x, b.x)); c <= col(std::max(a.x, b.x)); ++c) canvas[r][c] = '-';
  }
  // Verticals pass over: they overwrite whatever horizontal is underneath.
  for (const GridEdge& e : g.vertical) {
    const GridPoint a = g.nodes[e.a];
    const GridPoint b = g.nodes[e.b];
    const int c = col(a.x);
    for (int r = row(std::max(a.y, b.y)); r <= row(std::min(a.y, b.y)); ++r) canvas[r][c] = '|';
  }
  for (const GridPoint& n : g.nodes) canvas[row(n.y)][col(n.x)] = '+';
  // Direction marks next to the starting node of each horizontal edge.
  for (const auto& [from, to] : oriented_edges(g)) {
    const GridPoint a = g.nodes[from];
    const GridPoint b = g.nodes[to];
    if (a.y != b.y) continue;
    const int step = b.x > a.x ? 1 : -1;
    char& cell = canvas[row(a.y)][col(a.x) + step];
    if (cell == '-') cell = step > 0 ? '>' : '<';
  }

  std::ostringstream os;
  for (const std::string& line : canvas) os << line << '\n';
  return os.str();
}

std::string render_svg(const GridDiagram& g) {
  constexpr int unit = 40;
  constexpr int margin = 30;
  const int p = g.size;
  const int extent = 2 * margin + (p - 1) * unit;
  auto px = [&](int x) { return margin + (x - 1) * unit; };
  auto py = [&](int y) { return margin + (p - y) * unit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << extent
     << "\" height=\"" << extent << "\" viewBox=\"0 0 " << extent << ' ' << extent << "\">\n"
     << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\">\n"
     << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto edges = oriented_edges(g);
  auto emit = [&](int from, int to, const char* cls) {
    const GridPoint a = g.nodes[from];
    const GridPoint b = g.nodes[to];
    const double mx = (px(a.x) + px(b.x)) / 2.0;
    const double my = (py(a.y) + py(b.y)) / 2.0;
    os << "  <path class=\"" << cls << "\" d=\"M " << px(a.x) << ' ' << py(a.y) << " L " << mx
       << ' ' << my << " L " << px(b.x) << ' ' << py(b.y)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" marker-mid=\"url(#arrow)\"/>\n";
  };
  for (const auto& [from, to] : edges) {
    if (g.nodes[from].y == g.nodes[to].y) emit(from, to, "horizontal");
  }
  // Gaps in the horizontals where a vertical passes over.
  for (const GridEdge& v : g.vertical) {
    const GridPoint a = g.nodes[v.a];
    const GridPoint b = g.nodes[v.b];
    for (const GridEdge& h : g.horizontal) {
      const GridPoint c = g.nodes[h.a];
      const GridPoint d = g.nodes[h.b];
      const bool x_in = std::min(c.x, d.x) < a.x && a.x < std::max(c.x, d.x);
      const bool y_in = std::min(a.y, b.y) < c.y && c.y < std::max(a.y, b.y);
      if (x_in && y_in) {
        os << "  <rect x=\"" << px(a.x) - 7 << "\" y=\"" << py(c.y) - 4
           << "\" width=\"14\" height=\"8\" fill=\"white\"/>\n";
      }
    }
  }
  for (const auto& [from, to] : edges) {
    if (g.nodes[from].x == g.nodes[to].x) emit(from, to, "vertical");
  }
  for (const GridPoint& n : g.nodes) {
    os << "  <circle cx=\"" << px(n.x) << "\" cy=\"" << py(n.y) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const GridDiagram& g, RenderFormat format) {
  return format == RenderFormat::svg ? render_svg(g) : render_ascii(g);
}

}  // namespace petalgrid
