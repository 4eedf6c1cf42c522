#include <algorithm>
#include <cstdlib>

#include "petalgrid/grid.hpp"

namespace petalgrid {

GridDiagram build_petal_grid(const PetalPermutation& pp) {
  const int p = pp.length();
  GridDiagram g;
  g.size = p;
  g.nodes.reserve(2 * p);
  for (int i = 1; i <= 2 * p; ++i) {
    g.nodes.push_back({(i + 1) / 2, pp[(i - 1) % p + 1]});
  }
  for (int i = 1; i <= p; ++i) {
    g.horizontal.push_back({i - 1, p + i - 1});
    g.vertical.push_back({2 * i - 2, 2 * i - 1});
  }
  // A_p -> A_{p+1} -> A_1 -> A_2 -> A_{p+2} -> A_{p+3} -> A_3 -> ...
  g.traversal.reserve(2 * p);
  int node = p - 1;
  for (int step = 0; step < p; ++step) {
    g.traversal.push_back(node);
    const int up = node + 1;  // vertical partner of an odd-indexed A_i
    g.traversal.push_back(up);
    node = (up + p) % (2 * p);  // horizontal partner A_{i±p}
  }
  return g;
}

namespace {

struct Incidence {
  std::vector<int> horizontal_of;  // node -> horizontal edge index, -1 if none
  std::vector<int> vertical_of;
  bool ok = true;
};

Incidence incidence(const GridDiagram& g, std::vector<GridViolation>& out) {
  using Kind = GridViolation::Kind;
  const int count = static_cast<int>(g.nodes.size());
  Incidence inc{std::vector<int>(count, -1), std::vector<int>(count, -1)};
  auto attach = [&](std::vector<int>& slot, const GridEdge& e, int index, const char* what) {
    for (int v : {e.a, e.b}) {
      if (v < 0 || v >= count) {
        out.push_back({Kind::edge_shape, std::string(what) + " edge " + std::to_string(index) +
                                             " references a missing node"});
        inc.ok = false;
        return;
      }
    }
    for (int v : {e.a, e.b}) {
      if (slot[v] != -1) {
        out.push_back({Kind::edge_shape, "node " + std::to_string(v) + " has two " + what + " edges"});
        inc.ok = false;
      }
      slot[v] = index;
    }
  };
  for (std::size_t i = 0; i < g.horizontal.size(); ++i) {
    attach(inc.horizontal_of, g.horizontal[i], static_cast<int>(i), "horizontal");
  }
  for (std::size_t i = 0; i < g.vertical.size(); ++i) {
    attach(inc.vertical_of, g.vertical[i], static_cast<int>(i), "vertical");
  }
  if (!inc.ok) return inc;
  for (std::size_t i = 0; i < g.horizontal.size(); ++i) {
    const GridPoint a = g.nodes[g.horizontal[i].a];
    const GridPoint b = g.nodes[g.horizontal[i].b];
    if (a.y != b.y || a.x == b.x) {
      out.push_back({Kind::edge_shape, "horizontal edge " + std::to_string(i) + " is not horizontal"});
      inc.ok = false;
    }
  }
  for (std::size_t i = 0; i < g.vertical.size(); ++i) {
    const GridPoint a = g.nodes[g.vertical[i].a];
    const GridPoint b = g.nodes[g.vertical[i].b];
    if (a.x != b.x || a.y == b.y) {
      out.push_back({Kind::edge_shape, "vertical edge " + std::to_string(i) + " is not vertical"});
      inc.ok = false;
    }
  }
  for (int v = 0; v < count; ++v) {
    if (inc.horizontal_of[v] < 0 || inc.vertical_of[v] < 0) {
      out.push_back({Kind::edge_shape, "node " + std::to_string(v) + " is not on one horizontal and one vertical edge"});
      inc.ok = false;
    }
  }
  return inc;
}

void check_occupancy(const GridDiagram& g, std::vector<GridViolation>& out) {
  using Kind = GridViolation::Kind;
  const int p = g.size;
  if (static_cast<int>(g.nodes.size()) != 2 * p) {
    out.push_back({Kind::line_occupancy, "expected " + std::to_string(2 * p) + " nodes, found " +
                                             std::to_string(g.nodes.size())});
  }
  std::vector<int> rows(p + 1, 0);
  std::vector<int> cols(p + 1, 0);
  for (const GridPoint& n : g.nodes) {
    if (n.x < 1 || n.x > p || n.y < 1 || n.y > p) {
      out.push_back({Kind::line_occupancy, "node (" + std::to_string(n.x) + "," +
                                               std::to_string(n.y) + ") outside the grid"});
      continue;
    }
    ++cols[n.x];
    ++rows[n.y];
  }
  for (int k = 1; k <= p; ++k) {
    if (rows[k] != 2) {
      out.push_back({Kind::line_occupancy, "row y=" + std::to_string(k) + " holds " +
                                               std::to_string(rows[k]) + " nodes"});
    }
    if (cols[k] != 2) {
      out.push_back({Kind::line_occupancy, "column x=" + std::to_string(k) + " holds " +
                                               std::to_string(cols[k]) + " nodes"});
    }
  }
}

bool is_edge(const GridEdge& e, int u, int v) {
  return (e.a == u && e.b == v) || (e.a == v && e.b == u);
}

void check_traversal(const GridDiagram& g, const Incidence& inc, std::vector<GridViolation>& out) {
  using Kind = GridViolation::Kind;
  const auto& t = g.traversal;
  const int count = static_cast<int>(g.nodes.size());
  if (static_cast<int>(t.size()) != count) {
    out.push_back({Kind::traversal, "traversal visits " + std::to_string(t.size()) + " of " +
                                        std::to_string(count) + " nodes"});
    return;
  }
  std::vector<bool> seen(count, false);
  for (int v : t) {
    if (v < 0 || v >= count || seen[v]) {
      out.push_back({Kind::traversal, "traversal repeats or leaves the node set"});
      return;
    }
    seen[v] = true;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int u = t[i];
    const int v = t[(i + 1) % t.size()];
    const bool vertical_step = i % 2 == 0;
    const GridEdge& e = vertical_step ? g.vertical[inc.vertical_of[u]] : g.horizontal[inc.horizontal_of[u]];
    if (!is_edge(e, u, v)) {
      out.push_back({Kind::traversal, "traversal step " + std::to_string(i) +
                                          " does not follow a " +
                                          (vertical_step ? "vertical" : "horizontal") + " edge"});
      return;
    }
  }
}

}  // namespace

GridValidation validate_petal_grid(const GridDiagram& g) {
  using Kind = GridViolation::Kind;
  GridValidation result;
  auto& out = result.violations;

  check_occupancy(g, out);
  const Incidence inc = incidence(g, out);
  if (inc.ok) check_traversal(g, inc, out);

  if (g.size % 2 == 0) {
    out.push_back({Kind::even_size, "grid size " + std::to_string(g.size) + " is even"});
  }
  if (inc.ok && g.size % 2 == 1) {
    const int n = (g.size - 1) / 2;
    std::vector<int> inflections;
    for (std::size_t i = 0; i < g.vertical.size(); ++i) {
      const GridEdge& v = g.vertical[i];
      auto reach = [&](int node) {
        const GridEdge& h = g.horizontal[inc.horizontal_of[node]];
        const int other = h.a == node ? h.b : h.a;
        return g.nodes[other].x - g.nodes[node].x;
      };
      const int da = reach(v.a);
      const int db = reach(v.b);
      const int la = std::abs(da);
      const int lb = std::abs(db);
      if ((da > 0) != (db > 0)) {
        inflections.push_back(static_cast<int>(i));
        if (la != n || lb != n) {
          out.push_back({Kind::inflection_length,
                         "inflection edge " + std::to_string(i) + " has adjacent lengths " +
                             std::to_string(la) + " and " + std::to_string(lb)});
        }
      } else if (std::min(la, lb) != n || std::max(la, lb) != n + 1) {
        out.push_back({Kind::edge_lengths, "vertical edge " + std::to_string(i) +
                                               " has adjacent lengths " + std::to_string(la) +
                                               " and " + std::to_string(lb)});
      }
    }
    if (inflections.size() == 1) {
      result.inflection_edge = inflections.front();
    } else {
      out.push_back({Kind::inflection_count,
                     "found " + std::to_string(inflections.size()) + " inflection edges"});
    }
  }
  result.valid = out.empty();
  return result;
}

}  // namespace petalgrid
