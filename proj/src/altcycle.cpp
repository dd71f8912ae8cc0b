#include "hexaf/altcycle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hexaf/generators.hpp"

namespace hexaf {

namespace {

long long signed_area2(const std::vector<int>& vseq, const HexSystem& h) {
    long long a = 0;
    for (std::size_t i = 0; i < vseq.size(); ++i) {
        Point p = h.verts[vseq[i]];
        Point q = h.verts[vseq[(i + 1) % vseq.size()]];
        a += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
    }
    return a;
}

// Cells whose center lies strictly inside the closed curve. Centers have
// y = 0 mod 3 while curve vertices have y = 1 or 2 mod 3, so a horizontal
// ray from a center meets the curve only across its vertical edges; count
// the vertical edges to the right of the center for the parity test.
std::vector<int> interior_cells(const std::vector<int>& vseq, const HexSystem& h) {
    std::vector<int> out;
    for (int c = 0; c < h.num_cells(); ++c) {
        Point ctr = cell_center(h.cells[c]);
        int crossings = 0;
        for (std::size_t i = 0; i < vseq.size(); ++i) {
            Point p = h.verts[vseq[i]];
            Point q = h.verts[vseq[(i + 1) % vseq.size()]];
            if (p.x != q.x) continue;  // only vertical edges can cross the ray
            if (p.x <= ctr.x) continue;
            if (std::min(p.y, q.y) < ctr.y && ctr.y < std::max(p.y, q.y)) ++crossings;
        }
        if (crossings % 2 == 1) out.push_back(c);
    }
    return out;
}

AltCycle finish_cycle(std::vector<int> vseq, const HexSystem& h) {
    // Canonical rotation: start at the minimal vertex, traversal direction
    // kept (matched edges black->white).
    auto mn = std::min_element(vseq.begin(), vseq.end());
    std::rotate(vseq.begin(), mn, vseq.end());
    AltCycle c;
    c.eseq.reserve(vseq.size());
    for (std::size_t i = 0; i < vseq.size(); ++i)
        c.eseq.push_back(h.edge_id(vseq[i], vseq[(i + 1) % vseq.size()]));
    c.vset = vseq;
    std::sort(c.vset.begin(), c.vset.end());
    c.eset = c.eseq;
    std::sort(c.eset.begin(), c.eset.end());
    c.proper = signed_area2(vseq, h) > 0;
    c.interior = interior_cells(vseq, h);
    c.vseq = std::move(vseq);
    return c;
}

// Johnson-style enumeration of directed simple cycles: for each start vertex
// s, search inside the strongly connected component of s in the subgraph
// induced by vertices >= s, so every cycle is reported at its minimal vertex.
struct CycleEnum {
    const std::vector<std::vector<int>>& succ;
    int n;
    std::size_t cap;
    std::vector<std::vector<int>> found;

    std::vector<int> comp;  // component id per vertex, -1 = excluded
    std::vector<char> blocked;
    std::vector<std::vector<int>> block_list;
    std::vector<int> stack;
    int s = 0;

    void tarjan(int floor) {
        comp.assign(n, -1);
        std::vector<int> idx(n, -1), low(n, 0), st;
        std::vector<char> on(n, 0);
        int timer = 0, ncomp = 0;
        std::function<void(int)> dfs = [&](int v) {
            idx[v] = low[v] = timer++;
            st.push_back(v);
            on[v] = 1;
            for (int w : succ[v]) {
                if (w < floor) continue;
                if (idx[w] == -1) {
                    dfs(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            }
            if (low[v] == idx[v]) {
                for (;;) {
                    int w = st.back();
                    st.pop_back();
                    on[w] = 0;
                    comp[w] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
        };
        for (int v = floor; v < n; ++v)
            if (idx[v] == -1) dfs(v);
    }

    void unblock(int v) {
        blocked[v] = 0;
        for (int u : block_list[v])
            if (blocked[u]) unblock(u);
        block_list[v].clear();
    }

    bool circuit(int v) {
        bool closed = false;
        stack.push_back(v);
        blocked[v] = 1;
        for (int w : succ[v]) {
            if (w < s || comp[w] != comp[s]) continue;
            if (w == s) {
                if (found.size() >= cap)
                    throw BudgetError("alternating cycle cap of " + std::to_string(cap) +
                                      " exceeded");
                found.push_back(stack);
                closed = true;
            } else if (!blocked[w] && circuit(w)) {
                closed = true;
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (int w : succ[v]) {
                if (w < s || comp[w] != comp[s]) continue;
                auto& bl = block_list[w];
                if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
            }
        }
        stack.pop_back();
        return closed;
    }

    void run() {
        blocked.assign(n, 0);
        block_list.assign(n, {});
        for (s = 0; s < n; ++s) {
            tarjan(s);
            int size = 0;
            for (int v = s; v < n; ++v)
                if (comp[v] == comp[s]) ++size;
            if (size < 2) continue;
            for (int v = s; v < n; ++v) {
                blocked[v] = 0;
                block_list[v].clear();
            }
            circuit(s);
        }
    }
};

}  // namespace

std::vector<AltCycle> enumerate_alt_cycles(const HexSystem& h, const Matching& m,
                                           const AltCycleOptions& opt) {
    if (!is_perfect_matching(h, m)) throw std::invalid_argument("not a perfect matching");
    std::vector<char> in_m = edge_mask(h, m);
    std::vector<std::vector<int>> succ(h.num_verts());
    for (int e = 0; e < h.num_edges(); ++e) {
        auto [u, v] = h.edges[e];
        bool matched = in_m[e] != 0;
        int tail = (matched == static_cast<bool>(h.black[u])) ? u : v;
        int head = tail == u ? v : u;
        succ[tail].push_back(head);
    }
    for (auto& lst : succ) std::sort(lst.begin(), lst.end());

    CycleEnum ce{succ, h.num_verts(), opt.max_cycles, {}, {}, {}, {}, {}, 0};
    ce.run();

    std::vector<AltCycle> out;
    out.reserve(ce.found.size());
    for (std::vector<int>& vseq : ce.found) out.push_back(finish_cycle(std::move(vseq), h));
    std::sort(out.begin(), out.end(), [](const AltCycle& a, const AltCycle& b) {
        if (a.len() != b.len()) return a.len() < b.len();
        return a.vseq < b.vseq;
    });
    // Every alternating cycle encloses an alternating hexagon; anything else
    // means the interior computation or the orientation digraph is broken.
    for (const AltCycle& c : out) {
        bool has_hex = std::any_of(c.interior.begin(), c.interior.end(),
                                   [&](int cid) { return is_alternating_hexagon(h, m, cid); });
        if (!has_hex) throw std::logic_error("alternating cycle with no alternating hexagon inside");
    }
    return out;
}

bool is_alternating_hexagon(const HexSystem& h, const Matching& m, int cid) {
    const auto& ring = h.cell_edges[cid];
    for (int i = 0; i < 6; ++i)
        if (m.contains(ring[i]) == m.contains(ring[(i + 1) % 6])) return false;
    return true;
}

std::vector<int> alternating_hexagons(const HexSystem& h, const Matching& m) {
    std::vector<int> out;
    for (int c = 0; c < h.num_cells(); ++c)
        if (is_alternating_hexagon(h, m, c)) out.push_back(c);
    return out;
}

bool hexagon_proper(const HexSystem& h, const Matching& m, int cid) {
    if (!is_alternating_hexagon(h, m, cid))
        throw std::invalid_argument("hexagon is not alternating");
    // Ring is stored counterclockwise; proper means matched edges run
    // black->white along it.
    for (int i = 0; i < 6; ++i) {
        if (!m.contains(h.cell_edges[cid][i])) continue;
        return h.black[h.cell_verts[cid][i]];
    }
    throw std::logic_error("alternating hexagon without matched edge");
}

AltCycle make_hexagon_cycle(const HexSystem& h, const Matching& m, int cid) {
    std::vector<int> vseq(h.cell_verts[cid].begin(), h.cell_verts[cid].end());
    if (!hexagon_proper(h, m, cid)) std::reverse(vseq.begin(), vseq.end());
    return finish_cycle(std::move(vseq), h);
}

bool compatible(const HexSystem& h, const std::vector<char>& m_mask, const AltCycle& a,
                const AltCycle& b) {
    std::vector<int> sv;
    std::set_intersection(a.vset.begin(), a.vset.end(), b.vset.begin(), b.vset.end(),
                          std::back_inserter(sv));
    if (sv.empty()) return true;
    std::vector<int> se;
    std::set_intersection(a.eset.begin(), a.eset.end(), b.eset.begin(), b.eset.end(),
                          std::back_inserter(se));
    std::vector<int> covered;
    for (int e : se) {
        if (!m_mask[e]) return false;  // shared edge outside the matching
        covered.push_back(h.edges[e].first);
        covered.push_back(h.edges[e].second);
    }
    std::sort(covered.begin(), covered.end());
    for (int v : sv)
        if (!std::binary_search(covered.begin(), covered.end(), v)) return false;
    return true;
}

bool compatible(const HexSystem& h, const Matching& m, const AltCycle& a, const AltCycle& b) {
    return compatible(h, edge_mask(h, m), a, b);
}

bool non_crossing(const AltCycle& a, const AltCycle& b) {
    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    std::vector<int> common;
    std::set_intersection(a.interior.begin(), a.interior.end(), b.interior.begin(),
                          b.interior.end(), std::back_inserter(common));
    if (common.empty()) return true;
    return subset(a.interior, b.interior) || subset(b.interior, a.interior);
}

bool is_linear_chain_cells(const HexSystem& h, std::span<const int> cell_ids) {
    std::vector<Cell> cs;
    cs.reserve(cell_ids.size());
    for (int c : cell_ids) cs.push_back(h.cells[c]);
    return is_linear_chain(cs);
}

bool is_linear_chain_interior(const HexSystem& h, const AltCycle& c) {
    if (c.interior.empty()) return false;
    return is_linear_chain_cells(h, c.interior);
}

std::vector<int> clockwise_vseq(const AltCycle& c) {
    std::vector<int> v = c.vseq;
    if (c.proper) {  // stored traversal is counterclockwise
        std::reverse(v.begin(), v.end());
        std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    }
    return v;
}

Matching rotate(const HexSystem& h, const Matching& m, const AltCycle& c) {
    return rotate(h, m, std::span<const int>(c.eseq));
}

}  // namespace hexaf
