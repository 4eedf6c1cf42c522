#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "petalgrid/petal.hpp"

namespace petalgrid {

/// Lattice point; x grows rightward, y upward, both in {1..p}.
struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Edge between two node indices (0-based into GridDiagram::nodes).
struct GridEdge {
  int a = 0;
  int b = 0;
  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

/// A grid diagram on {1..p}×{1..p}. Vertical edges always pass over
/// horizontal ones. `traversal` lists node indices in the order the knot
/// visits them (closing back to the first), which fixes the orientation.
struct GridDiagram {
  int size = 0;
  std::vector<GridPoint> nodes;
  std::vector<GridEdge> horizontal;
  std::vector<GridEdge> vertical;
  std::vector<int> traversal;
};

/// Nodes A_i = (⌈i/2⌉, a_i) for 1 <= i <= 2p (indices of a taken mod p),
/// horizontal edges A_i A_{p+i}, vertical edges A_{2i-1} A_{2i}. Node A_i is
/// stored at index i - 1; the traversal starts on the inflection edge A_p A_{p+1}.
GridDiagram build_petal_grid(const PetalPermutation& pp);

struct GridViolation {
  enum class Kind {
    line_occupancy,     ///< a row or column without exactly two nodes
    edge_shape,         ///< an edge that is not axis-parallel or is degenerate
    traversal,          ///< traversal is not one closed alternating cycle
    even_size,          ///< p is not odd
    inflection_count,   ///< not exactly one inflection edge
    inflection_length,  ///< inflection edge neighbours not both of length n
    edge_lengths,       ///< ordinary vertical edge without lengths {n, n+1}
  };
  Kind kind;
  std::string message;
};

struct GridValidation {
  bool valid = false;
  std::optional<int> inflection_edge;  ///< index into GridDiagram::vertical
  std::vector<GridViolation> violations;
};

/// Checks the grid axioms and the petal grid conditions; never throws.
GridValidation validate_petal_grid(const GridDiagram& g);

/// A crossing of the planar diagram. Arcs run from one under-passage to the
/// next; `pd` is the 4-tuple of edge labels (edges run between consecutive
/// passages) starting at the incoming under edge and going counterclockwise.
struct Crossing {
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  int sign = 0;
  GridPoint at;  ///< lattice position (column of the vertical, row of the horizontal)
  std::array<int, 4> pd{};
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;
  int edge_count = 0;
  int components = 0;

  int writhe() const;
};

/// Crossing extraction with vertical-over-horizontal resolution. Arcs and
/// PD edges are numbered along the traversal starting at its first node.
/// Throws std::invalid_argument("malformed grid") on colliding edges.
PlanarDiagram to_planar_diagram(const GridDiagram& g);

enum class RenderFormat { ascii, svg };

std::string render_ascii(const GridDiagram& g);
std::string render_svg(const GridDiagram& g);
std::string render(const GridDiagram& g, RenderFormat format);

}  // namespace petalgrid
