#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hexaf/cell.hpp"
#include "hexaf/errors.hpp"

namespace hexaf {

struct Hexagon {
    Cell cell;
    std::array<int, 6> vertices;  // corner ids, counterclockwise from the top
    std::array<int, 6> edges;     // edges[i] joins vertices[i] and vertices[(i+1)%6]
    bool external = false;        // carries at least one boundary edge
};

// A validated hexagonal system: an edge-connected, simply connected set of
// lattice cells together with the plane bipartite graph it spans. All ids
// are indices into the sorted vertex/edge/cell tables, so they only depend
// on the cell set, not on input order.
struct HexSystem {
    std::vector<Cell> cells;                          // sorted
    std::vector<Point> verts;                         // sorted by (x,y)
    std::vector<std::pair<int, int>> edges;           // (u,v) with u<v, sorted
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)
    std::vector<bool> black;                          // bipartition color per vertex
    std::vector<std::array<int, 6>> cell_verts;       // ring corners, ccw from top
    std::vector<std::array<int, 6>> cell_edges;       // ring edges, ccw
    std::vector<signed char> edge_cells;              // 1 = boundary edge, 2 = internal
    std::vector<std::vector<int>> cell_adj;           // cell ids sharing an edge
    std::vector<int> boundary;                        // outer face cycle, clockwise

    int num_cells() const { return static_cast<int>(cells.size()); }
    int num_verts() const { return static_cast<int>(verts.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int vertex_id(Point p) const;   // -1 if absent
    int edge_id(int u, int v) const;
    int cell_id(Cell c) const;
    bool boundary_edge(int e) const { return edge_cells[e] == 1; }
    Hexagon hexagon(int cid) const;
    bool balanced() const;          // equal numbers of black and white vertices

    // Validates: nonempty, no duplicate cells, edge-connected, hole-free
    // (edge count must equal #vertices + #cells - 1), 2-connected graph.
    static HexSystem build(std::vector<Cell> cells);
};

}  // namespace hexaf
