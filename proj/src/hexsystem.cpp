#include "hexaf/hexsystem.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

namespace hexaf {

namespace {

template <typename T>
int index_of(const std::vector<T>& sorted, const T& key) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
    if (it == sorted.end() || *it != key) return -1;
    return static_cast<int>(it - sorted.begin());
}

// Signed double area of a closed polygon over lattice points; > 0 means
// counterclockwise with y growing upward.
long long signed_area2(const std::vector<int>& cycle, const std::vector<Point>& verts) {
    long long a = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point p = verts[cycle[i]];
        Point q = verts[cycle[(i + 1) % cycle.size()]];
        a += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
    }
    return a;
}

void check_two_connected(const HexSystem& h) {
    int n = h.num_verts();
    if (n < 3) throw ValidationError("derived graph is not 2-connected");
    std::vector<int> tin(n, -1), low(n, 0);
    int timer = 0;
    bool has_cut = false;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        tin[v] = low[v] = timer++;
        int children = 0;
        for (auto [to, e] : h.adj[v]) {
            (void)e;
            if (to == parent) continue;
            if (tin[to] != -1) {
                low[v] = std::min(low[v], tin[to]);
            } else {
                ++children;
                dfs(to, v);
                low[v] = std::min(low[v], low[to]);
                if (parent != -1 && low[to] >= tin[v]) has_cut = true;
            }
        }
        if (parent == -1 && children > 1) has_cut = true;
    };
    dfs(0, -1);
    for (int v = 0; v < n; ++v)
        if (tin[v] == -1) throw ValidationError("derived graph is disconnected");
    if (has_cut) throw ValidationError("derived graph is not 2-connected");
}

}  // namespace

int HexSystem::vertex_id(Point p) const { return index_of(verts, p); }

int HexSystem::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    return index_of(edges, {u, v});
}

int HexSystem::cell_id(Cell c) const { return index_of(cells, c); }

Hexagon HexSystem::hexagon(int cid) const {
    Hexagon h;
    h.cell = cells[cid];
    h.vertices = cell_verts[cid];
    h.edges = cell_edges[cid];
    h.external = false;
    for (int e : h.edges)
        if (boundary_edge(e)) h.external = true;
    return h;
}

bool HexSystem::balanced() const {
    int b = 0;
    for (bool c : black) b += c ? 1 : 0;
    return 2 * b == num_verts();
}

HexSystem HexSystem::build(std::vector<Cell> cs) {
    if (cs.empty()) throw ValidationError("cell set is empty");
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
        throw ValidationError("duplicate cell in input");

    HexSystem h;
    h.cells = std::move(cs);
    int nc = h.num_cells();

    // Edge-connectivity of the cell set.
    h.cell_adj.assign(nc, {});
    for (int i = 0; i < nc; ++i)
        for (Cell d : kNeighbors) {
            int j = h.cell_id(h.cells[i] + d);
            if (j >= 0) h.cell_adj[i].push_back(j);
        }
    {
        std::vector<char> seen(nc, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int d : h.cell_adj[c])
                if (!seen[d]) {
                    seen[d] = 1;
                    stack.push_back(d);
                }
        }
        for (char s : seen)
            if (!s) throw ValidationError("cell set is not edge-connected");
    }

    // Vertex table: all corners, deduplicated by lattice point.
    for (Cell c : h.cells)
        for (int i = 0; i < 6; ++i) h.verts.push_back(cell_corner(c, i));
    std::sort(h.verts.begin(), h.verts.end());
    h.verts.erase(std::unique(h.verts.begin(), h.verts.end()), h.verts.end());

    // Edge table with per-edge cell counts.
    std::vector<std::pair<int, int>> raw;
    for (Cell c : h.cells)
        for (int i = 0; i < 6; ++i) {
            int u = h.vertex_id(cell_corner(c, i));
            int v = h.vertex_id(cell_corner(c, (i + 1) % 6));
            raw.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i]) ++j;
        h.edges.push_back(raw[i]);
        h.edge_cells.push_back(static_cast<signed char>(j - i));
        i = j;
    }

    // Euler count: a connected union of cells satisfies m = n + #cells - 1
    // exactly when the union has no holes.
    if (h.num_edges() != h.num_verts() + nc - 1)
        throw ValidationError("cell set has a hole");

    h.adj.assign(h.num_verts(), {});
    for (int e = 0; e < h.num_edges(); ++e) {
        auto [u, v] = h.edges[e];
        h.adj[u].emplace_back(v, e);
        h.adj[v].emplace_back(u, e);
    }

    check_two_connected(h);

    h.black.resize(h.num_verts());
    for (int v = 0; v < h.num_verts(); ++v) h.black[v] = point_black(h.verts[v]);
    for (int v = 0; v < h.num_verts(); ++v) {
        bool peak = true, valley = true;
        for (auto [to, e] : h.adj[v]) {
            (void)e;
            if (h.verts[to].y > h.verts[v].y) peak = false;
            if (h.verts[to].y < h.verts[v].y) valley = false;
        }
        if (peak && !h.black[v]) throw std::logic_error("peak vertex is not black");
        if (valley && h.black[v]) throw std::logic_error("valley vertex is not white");
    }

    h.cell_verts.assign(nc, {});
    h.cell_edges.assign(nc, {});
    for (int c = 0; c < nc; ++c)
        for (int i = 0; i < 6; ++i) {
            h.cell_verts[c][i] = h.vertex_id(cell_corner(h.cells[c], i));
            h.cell_edges[c][i] =
                h.edge_id(h.cell_verts[c][i], h.vertex_id(cell_corner(h.cells[c], (i + 1) % 6)));
        }

    // Boundary: edges lying in exactly one cell form a single cycle for a
    // hole-free system. Trace it and orient it clockwise.
    {
        int nb = 0;
        for (int e = 0; e < h.num_edges(); ++e) nb += h.boundary_edge(e) ? 1 : 0;
        int start = -1;
        for (int v = 0; v < h.num_verts() && start < 0; ++v)
            for (auto [to, e] : h.adj[v]) {
                (void)to;
                if (h.boundary_edge(e)) {
                    start = v;
                    break;
                }
            }
        std::vector<int> cyc = {start};
        int prev = -1, cur = start;
        do {
            int next = -1;
            for (auto [to, e] : h.adj[cur])
                if (h.boundary_edge(e) && to != prev && (next < 0 || to < next)) next = to;
            prev = cur;
            cur = next;
            if (cur != start) cyc.push_back(cur);
        } while (cur != start);
        if (static_cast<int>(cyc.size()) != nb)
            throw std::logic_error("boundary trace did not close over all boundary edges");
        if (signed_area2(cyc, h.verts) > 0) std::reverse(cyc.begin() + 1, cyc.end());
        h.boundary = std::move(cyc);
    }

    return h;
}

}  // namespace hexaf
