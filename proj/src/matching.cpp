#include "hexaf/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hexaf {

std::vector<char> edge_mask(const HexSystem& h, const Matching& m) {
    std::vector<char> mask(h.num_edges(), 0);
    for (int e : m.edges) mask[e] = 1;
    return mask;
}

bool is_perfect_matching(const HexSystem& h, const Matching& m) {
    std::vector<char> covered(h.num_verts(), 0);
    for (int e : m.edges) {
        if (e < 0 || e >= h.num_edges()) return false;
        auto [u, v] = h.edges[e];
        if (covered[u] || covered[v]) return false;
        covered[u] = covered[v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

struct MatchingEnum {
    const HexSystem& h;
    std::vector<char> covered;
    std::vector<int> chosen;
    std::vector<Matching>& out;

    void take(int e, std::vector<int>& log) {
        auto [u, v] = h.edges[e];
        covered[u] = covered[v] = 1;
        chosen.push_back(e);
        log.push_back(e);
    }

    void untake(int e) {
        auto [u, v] = h.edges[e];
        covered[u] = covered[v] = 0;
        chosen.pop_back();
    }

    // Number of usable incident edges; if exactly one, report it.
    int options(int v, int* only) const {
        int cnt = 0;
        for (auto [to, e] : h.adj[v])
            if (!covered[to]) {
                ++cnt;
                *only = e;
            }
        return cnt;
    }

    void run() {
        std::vector<int> forced;
        bool dead = false;
        // Cheap propagation: vertices left with one usable edge are forced.
        for (bool progress = true; progress && !dead;) {
            progress = false;
            for (int v = 0; v < h.num_verts(); ++v) {
                if (covered[v]) continue;
                int only = -1;
                int cnt = options(v, &only);
                if (cnt == 0) {
                    dead = true;
                    break;
                }
                if (cnt == 1) {
                    take(only, forced);
                    progress = true;
                }
            }
        }
        if (!dead) {
            int pivot = -1;
            for (int v = 0; v < h.num_verts(); ++v)
                if (!covered[v]) {
                    pivot = v;
                    break;
                }
            if (pivot < 0) {
                Matching m;
                m.edges = chosen;
                std::sort(m.edges.begin(), m.edges.end());
                out.push_back(std::move(m));
            } else {
                for (auto [to, e] : h.adj[pivot])
                    if (!covered[to]) {
                        std::vector<int> log;
                        take(e, log);
                        run();
                        for (auto it = log.rbegin(); it != log.rend(); ++it) untake(*it);
                    }
            }
        }
        for (auto it = forced.rbegin(); it != forced.rend(); ++it) untake(*it);
    }
};

struct CappedCounter {
    const HexSystem& h;
    const std::vector<char>& edge_gone;
    std::vector<char> covered;
    int cap;
    int found = 0;

    int options(int v, int* only) const {
        int cnt = 0;
        for (auto [to, e] : h.adj[v])
            if (!edge_gone[e] && !covered[to]) {
                ++cnt;
                *only = e;
            }
        return cnt;
    }

    void run() {
        if (found >= cap) return;
        std::vector<int> forced;
        auto take = [&](int e) {
            auto [u, v] = h.edges[e];
            covered[u] = covered[v] = 1;
            forced.push_back(e);
        };
        bool dead = false;
        for (bool progress = true; progress && !dead;) {
            progress = false;
            for (int v = 0; v < h.num_verts(); ++v) {
                if (covered[v]) continue;
                int only = -1;
                int cnt = options(v, &only);
                if (cnt == 0) {
                    dead = true;
                    break;
                }
                if (cnt == 1) {
                    take(only);
                    progress = true;
                }
            }
        }
        if (!dead) {
            int pivot = -1;
            for (int v = 0; v < h.num_verts(); ++v)
                if (!covered[v]) {
                    pivot = v;
                    break;
                }
            if (pivot < 0) {
                ++found;
            } else {
                for (auto [to, e] : h.adj[pivot]) {
                    if (edge_gone[e] || covered[to]) continue;
                    auto [u, v] = h.edges[e];
                    covered[u] = covered[v] = 1;
                    run();
                    covered[u] = covered[v] = 0;
                    if (found >= cap) break;
                }
            }
        }
        for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
            auto [u, v] = h.edges[*it];
            covered[u] = covered[v] = 0;
        }
    }
};

// Kuhn augmenting path over an edge filter.
struct Matcher {
    const HexSystem& h;
    const std::vector<char>& vertex_gone;
    const std::vector<char>& edge_gone;
    std::vector<int> match;  // partner vertex or -1
    std::vector<char> seen;

    bool augment(int v) {
        for (auto [to, e] : h.adj[v]) {
            if (vertex_gone[to] || edge_gone[e] || seen[to]) continue;
            seen[to] = 1;
            if (match[to] == -1 || augment(match[to])) {
                match[to] = v;
                match[v] = to;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        match.assign(h.num_verts(), -1);
        for (int v = 0; v < h.num_verts(); ++v) {
            if (vertex_gone[v] || !h.black[v] || match[v] != -1) continue;
            seen.assign(h.num_verts(), 0);
            if (!augment(v)) return false;
        }
        for (int v = 0; v < h.num_verts(); ++v)
            if (!vertex_gone[v] && match[v] == -1) return false;
        return true;
    }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const HexSystem& h) {
    std::vector<Matching> out;
    if (!h.balanced()) return out;
    MatchingEnum me{h, std::vector<char>(h.num_verts(), 0), {}, out};
    me.run();
    std::sort(out.begin(), out.end());
    return out;
}

bool has_perfect_matching(const HexSystem& h) {
    if (!h.balanced()) return false;
    std::vector<char> vg(h.num_verts(), 0), eg(h.num_edges(), 0);
    Matcher m{h, vg, eg, {}, {}};
    return m.perfect();
}

int count_matchings_up_to(const HexSystem& h, std::span<const int> deleted_edges, int cap) {
    if (!h.balanced() || cap <= 0) return 0;
    std::vector<char> eg(h.num_edges(), 0);
    for (int e : deleted_edges) eg[e] = 1;
    CappedCounter cc{h, eg, std::vector<char>(h.num_verts(), 0), cap};
    cc.run();
    return cc.found;
}

bool is_nice(const HexSystem& h, std::span<const int> vertex_ids) {
    std::vector<char> vg(h.num_verts(), 0), eg(h.num_edges(), 0);
    for (int v : vertex_ids) vg[v] = 1;
    int black = 0, white = 0;
    for (int v = 0; v < h.num_verts(); ++v)
        if (!vg[v]) (h.black[v] ? black : white)++;
    if (black != white) return false;
    Matcher m{h, vg, eg, {}, {}};
    return m.perfect();
}

bool has_unique_pm(const HexSystem& h, std::span<const int> deleted_edges, const Matching& m) {
    std::vector<char> gone(h.num_edges(), 0);
    for (int e : deleted_edges) gone[e] = 1;
    for (int e : m.edges)
        if (gone[e]) throw std::invalid_argument("matching uses a deleted edge");
    if (!is_perfect_matching(h, m)) throw std::invalid_argument("not a perfect matching");

    // Orient matched edges black->white, others white->black; the matching is
    // unique on the subgraph exactly when this digraph is acyclic.
    std::vector<char> in_m = edge_mask(h, m);
    std::vector<std::vector<int>> succ(h.num_verts());
    for (int e = 0; e < h.num_edges(); ++e) {
        if (gone[e]) continue;
        auto [u, v] = h.edges[e];
        int tail = in_m[e] == h.black[u] ? u : v;  // matched: black tail; else white
        int head = tail == u ? v : u;
        succ[tail].push_back(head);
    }
    std::vector<signed char> state(h.num_verts(), 0);  // 0 new, 1 active, 2 done
    std::function<bool(int)> has_cycle = [&](int v) {
        state[v] = 1;
        for (int to : succ[v]) {
            if (state[to] == 1) return true;
            if (state[to] == 0 && has_cycle(to)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < h.num_verts(); ++v)
        if (state[v] == 0 && has_cycle(v)) return false;
    return true;
}

Matching rotate(const HexSystem& h, const Matching& m, std::span<const int> cycle_eseq) {
    if (cycle_eseq.empty() || cycle_eseq.size() % 2 != 0)
        throw std::invalid_argument("cycle must have positive even length");
    for (std::size_t i = 0; i < cycle_eseq.size(); ++i) {
        bool a = m.contains(cycle_eseq[i]);
        bool b = m.contains(cycle_eseq[(i + 1) % cycle_eseq.size()]);
        if (a == b) throw std::invalid_argument("cycle is not alternating for this matching");
    }
    std::vector<int> result = m.edges;
    for (int e : cycle_eseq) {
        if (m.contains(e))
            result.erase(std::find(result.begin(), result.end(), e));
        else
            result.push_back(e);
    }
    std::sort(result.begin(), result.end());
    Matching r{std::move(result)};
    if (!is_perfect_matching(h, r)) throw std::invalid_argument("rotation left the matching broken");
    return r;
}

}  // namespace hexaf
