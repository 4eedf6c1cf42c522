#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "petalgrid/grid.hpp"

namespace petalgrid {

int PlanarDiagram::writhe() const {
  return std::accumulate(crossings.begin(), crossings.end(), 0,
                         [](int acc, const Crossing& c) { return acc + c.sign; });
}

namespace {

struct Segment {
  GridPoint from;
  GridPoint to;
  bool vertical;
  int dx() const { return (to.x > from.x) - (to.x < from.x); }
  int dy() const { return (to.y > from.y) - (to.y < from.y); }
};

[[noreturn]] void malformed() { throw std::invalid_argument("malformed grid"); }

// Oriented node cycles: the stored traversal first, then any component it misses.
std::vector<std::vector<int>> oriented_cycles(const GridDiagram& g) {
  const int count = static_cast<int>(g.nodes.size());
  std::vector<int> h_mate(count, -1);
  std::vector<int> v_mate(count, -1);
  for (const GridEdge& e : g.horizontal) {
    if (e.a < 0 || e.b < 0 || e.a >= count || e.b >= count) malformed();
    if (h_mate[e.a] != -1 || h_mate[e.b] != -1) malformed();
    h_mate[e.a] = e.b;
    h_mate[e.b] = e.a;
  }
  for (const GridEdge& e : g.vertical) {
    if (e.a < 0 || e.b < 0 || e.a >= count || e.b >= count) malformed();
    if (v_mate[e.a] != -1 || v_mate[e.b] != -1) malformed();
    v_mate[e.a] = e.b;
    v_mate[e.b] = e.a;
  }
  for (int v = 0; v < count; ++v) {
    if (h_mate[v] < 0 || v_mate[v] < 0) malformed();
  }

  std::vector<bool> used(count, false);
  std::vector<std::vector<int>> cycles;
  auto trace = [&](int start) {
    std::vector<int> cycle;
    int node = start;
    do {
      cycle.push_back(node);
      used[node] = true;
      const int up = v_mate[node];
      cycle.push_back(up);
      used[up] = true;
      node = h_mate[up];
    } while (node != start && !used[node]);
    if (node != start) malformed();
    cycles.push_back(std::move(cycle));
  };
  if (!g.traversal.empty()) {
    const int first = g.traversal.front();
    if (first < 0 || first >= count) malformed();
    // Follow the stored direction of the first vertical edge.
    if (g.traversal.size() > 1 && g.traversal[1] != v_mate[first]) malformed();
    trace(first);
  }
  for (int v = 0; v < count; ++v) {
    if (!used[v]) trace(v);
  }
  return cycles;
}

}  // namespace

PlanarDiagram to_planar_diagram(const GridDiagram& g) {
  for (const GridPoint& n : g.nodes) {
    if (n.x < 1 || n.x > g.size || n.y < 1 || n.y > g.size) malformed();
  }
  const auto cycles = oriented_cycles(g);

  // Oriented segments per component, in traversal order.
  std::vector<std::vector<Segment>> paths;
  for (const auto& cycle : cycles) {
    std::vector<Segment> path;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const GridPoint a = g.nodes[cycle[i]];
      const GridPoint b = g.nodes[cycle[(i + 1) % cycle.size()]];
      const bool vertical = i % 2 == 0;
      if (vertical ? (a.x != b.x || a.y == b.y) : (a.y != b.y || a.x == b.x)) malformed();
      path.push_back({a, b, vertical});
    }
    paths.push_back(std::move(path));
  }

  // Crossings: every vertical segment against every horizontal one.
  PlanarDiagram pd;
  pd.components = static_cast<int>(cycles.size());
  struct Hit {
    int crossing;
    int component, segment;
    int distance;
    bool over;
  };
  std::vector<Hit> hits;
  std::vector<std::pair<Segment, Segment>> crossing_segments;  // (over, under)
  for (std::size_t ci = 0; ci < paths.size(); ++ci) {
    for (std::size_t si = 0; si < paths[ci].size(); ++si) {
      const Segment& v = paths[ci][si];
      if (!v.vertical) continue;
      const int ylo = std::min(v.from.y, v.to.y);
      const int yhi = std::max(v.from.y, v.to.y);
      for (std::size_t cj = 0; cj < paths.size(); ++cj) {
        for (std::size_t sj = 0; sj < paths[cj].size(); ++sj) {
          const Segment& h = paths[cj][sj];
          if (h.vertical) continue;
          const int xlo = std::min(h.from.x, h.to.x);
          const int xhi = std::max(h.from.x, h.to.x);
          const bool x_inside = xlo < v.from.x && v.from.x < xhi;
          const bool y_inside = ylo < h.from.y && h.from.y < yhi;
          const bool x_touch = v.from.x == xlo || v.from.x == xhi;
          const bool y_touch = h.from.y == ylo || h.from.y == yhi;
          if ((x_touch && y_inside) || (y_touch && x_inside)) malformed();
          if (!(x_inside && y_inside)) continue;
          const int id = static_cast<int>(crossing_segments.size());
          crossing_segments.emplace_back(v, h);
          hits.push_back({id, static_cast<int>(ci), static_cast<int>(si),
                          std::abs(h.from.y - v.from.y), true});
          hits.push_back({id, static_cast<int>(cj), static_cast<int>(sj),
                          std::abs(v.from.x - h.from.x), false});
          Crossing c;
          c.at = {v.from.x, h.from.y};
          // Right-handed (+1) when the over direction turned +90° is the under direction.
          c.sign = (v.dx() * h.dy() - v.dy() * h.dx()) > 0 ? 1 : -1;
          pd.crossings.push_back(c);
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.component, a.segment, a.distance) < std::tie(b.component, b.segment, b.distance);
  });

  // Walk each component: arcs break at under-passages, PD edges at every passage.
  const int passages = static_cast<int>(hits.size());
  pd.edge_count = passages;
  std::vector<int> in_edge_over(pd.crossings.size()), in_edge_under(pd.crossings.size());
  std::vector<int> over_comp(pd.crossings.size()), under_comp(pd.crossings.size());
  std::vector<std::pair<int, int>> edge_span;  // first and last PD edge per component
  int arc = 0;
  int edge = 0;
  std::size_t h = 0;
  for (int comp = 0; comp < pd.components; ++comp) {
    const int first_arc = arc;
    const int first_edge = edge + 1;
    int unders = 0;
    std::vector<int> touched;
    for (; h < hits.size() && hits[h].component == comp; ++h) {
      const int id = hits[h].crossing;
      Crossing& c = pd.crossings[id];
      ++edge;
      touched.push_back(id);
      if (hits[h].over) {
        c.over_arc = arc;
        in_edge_over[id] = edge;
        over_comp[id] = comp;
      } else {
        c.under_in_arc = arc;
        ++arc;
        c.under_out_arc = arc;
        in_edge_under[id] = edge;
        under_comp[id] = comp;
        ++unders;
      }
    }
    edge_span.emplace_back(first_edge, edge);
    if (unders == 0) {
      ++arc;  // a component with no under-passage is one arc
      continue;
    }
    for (int id : touched) {
      Crossing& c = pd.crossings[id];
      if (c.over_arc == arc) c.over_arc = first_arc;
      if (c.under_in_arc == arc) c.under_in_arc = first_arc;
      if (c.under_out_arc == arc) c.under_out_arc = first_arc;
    }
  }

  // The PD edge entering passage q is labelled q and the one leaving it q+1,
  // wrapping within the component.
  auto next_edge = [&](int e, int comp) {
    return e == edge_span[comp].second ? edge_span[comp].first : e + 1;
  };
  for (std::size_t id = 0; id < pd.crossings.size(); ++id) {
    Crossing& c = pd.crossings[id];
    const auto& [over_seg, under_seg] = crossing_segments[id];
    const int ui = in_edge_under[id];
    const int uo = next_edge(ui, under_comp[id]);
    const int oi = in_edge_over[id];
    const int oo = next_edge(oi, over_comp[id]);
    // Counterclockwise from the incoming under edge, the next slot is rot90(-d_under).
    const int rx = under_seg.dy();
    const int ry = -under_seg.dx();
    const bool next_is_over_out = rx == over_seg.dx() && ry == over_seg.dy();
    c.pd = {ui, next_is_over_out ? oo : oi, uo, next_is_over_out ? oi : oo};
  }
  pd.arc_count = std::max(arc, 1);
  return pd;
}

}  // namespace petalgrid
