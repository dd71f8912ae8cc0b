#include "hexaf/solvers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hexaf::solve {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
    int c = 0;
    for (std::uint64_t w : b) c += std::popcount(w);
    return c;
}

bool any(const Bits& b) {
    for (std::uint64_t w : b)
        if (w) return true;
    return false;
}

int first_bit(const Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) return static_cast<int>(i * 64 + std::countr_zero(b[i]));
    return -1;
}

void clear_bit(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
bool test_bit(const Bits& b, int v) { return (b[v >> 6] >> (v & 63)) & 1; }

Bits and_bits(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

// ---- hitting set ----

struct Hs {
    // Candidates remapped to 0..ncand-1 preserving order, so lex order over
    // remapped indices matches lex order over original ids.
    std::vector<int> ids;                   // index -> original id
    std::vector<std::vector<int>> sets;     // candidate indices, sorted
    std::vector<std::vector<int>> with;     // candidate -> containing sets
    int best = 0;

    explicit Hs(const std::vector<std::vector<int>>& raw) {
        for (const auto& s : raw) {
            if (s.empty()) throw std::logic_error("hitting set over an empty set");
            for (int e : s) ids.push_back(e);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        sets.reserve(raw.size());
        for (const auto& s : raw) {
            std::vector<int> t;
            for (int e : s)
                t.push_back(static_cast<int>(std::lower_bound(ids.begin(), ids.end(), e) -
                                             ids.begin()));
            std::sort(t.begin(), t.end());
            sets.push_back(std::move(t));
        }
        with.assign(ids.size(), {});
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (int e : sets[i]) with[e].push_back(static_cast<int>(i));
    }

    // Greedy pairwise-disjoint subfamily of the unhit sets, candidates below
    // floor ignored; returns a lower bound on the hits still needed, or -1
    // if some set has no usable candidate.
    int packing_bound(const std::vector<int>& unhit, int floor) const {
        std::vector<int> order = unhit;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sets[a].size() < sets[b].size();
        });
        std::vector<char> used(ids.size(), 0);
        int bound = 0;
        for (int si : order) {
            bool disjoint = true, usable = false;
            for (int e : sets[si]) {
                if (e < floor) continue;
                usable = true;
                if (used[e]) disjoint = false;
            }
            if (!usable) return -1;
            if (disjoint) {
                ++bound;
                for (int e : sets[si])
                    if (e >= floor) used[e] = 1;
            }
        }
        return bound;
    }

    std::vector<int> remove_hit(const std::vector<int>& unhit, int e) const {
        std::vector<int> rest;
        for (int si : unhit)
            if (!std::binary_search(sets[si].begin(), sets[si].end(), e)) rest.push_back(si);
        return rest;
    }

    int pick_branch_set(const std::vector<int>& unhit, int floor) const {
        int besti = -1, bestn = 0;
        for (int si : unhit) {
            int n = 0;
            for (int e : sets[si])
                if (e >= floor) ++n;
            if (besti < 0 || n < bestn) {
                besti = si;
                bestn = n;
            }
        }
        return besti;
    }

    void optimize(const std::vector<int>& unhit, int chosen) {
        if (unhit.empty()) {
            best = std::min(best, chosen);
            return;
        }
        int lb = packing_bound(unhit, 0);
        if (lb < 0 || chosen + lb >= best) return;
        int si = pick_branch_set(unhit, 0);
        for (int e : sets[si]) optimize(remove_hit(unhit, e), chosen + 1);
    }

    bool feasible(const std::vector<int>& unhit, int budget, int floor) const {
        if (unhit.empty()) return true;
        if (budget <= 0) return false;
        int lb = packing_bound(unhit, floor);
        if (lb < 0 || lb > budget) return false;
        int si = pick_branch_set(unhit, floor);
        for (int e : sets[si]) {
            if (e < floor) continue;
            if (feasible(remove_hit(unhit, e), budget - 1, floor)) return true;
        }
        return false;
    }

    int greedy_upper(std::vector<int> unhit) const {
        int k = 0;
        while (!unhit.empty()) {
            int beste = -1, bestn = -1;
            for (std::size_t e = 0; e < ids.size(); ++e) {
                int n = 0;
                for (int si : unhit)
                    if (std::binary_search(sets[si].begin(), sets[si].end(),
                                           static_cast<int>(e)))
                        ++n;
                if (n > bestn) {
                    bestn = n;
                    beste = static_cast<int>(e);
                }
            }
            unhit = remove_hit(unhit, beste);
            ++k;
        }
        return k;
    }
};

}  // namespace

int min_hitting_set_size(const std::vector<std::vector<int>>& sets) {
    if (sets.empty()) return 0;
    Hs hs(sets);
    std::vector<int> all(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) all[i] = static_cast<int>(i);
    hs.best = hs.greedy_upper(all);
    hs.optimize(all, 0);
    return hs.best;
}

std::vector<int> min_hitting_set_lex(const std::vector<std::vector<int>>& sets) {
    if (sets.empty()) return {};
    int k = min_hitting_set_size(sets);
    Hs hs(sets);
    std::vector<int> unhit(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) unhit[i] = static_cast<int>(i);
    std::vector<int> out;
    int floor = 0;
    while (!unhit.empty()) {
        for (int e = floor; e < static_cast<int>(hs.ids.size()); ++e) {
            std::vector<int> rest = hs.remove_hit(unhit, e);
            if (static_cast<int>(rest.size()) != static_cast<int>(unhit.size()) &&
                hs.feasible(rest, k - static_cast<int>(out.size()) - 1, e + 1)) {
                out.push_back(hs.ids[e]);
                unhit = std::move(rest);
                floor = e + 1;
                break;
            }
        }
    }
    return out;
}

// ---- cliques ----

namespace {

struct Mc {
    const BitGraph& g;
    int best = 0;

    void expand(Bits p, int rsize) {
        if (!any(p)) {
            best = std::max(best, rsize);
            return;
        }
        // Greedy coloring bound: one clique vertex per color class.
        std::vector<int> order, color;
        Bits uncolored = p;
        int c = 0;
        while (any(uncolored)) {
            ++c;
            Bits avail = uncolored;
            while (any(avail)) {
                int v = first_bit(avail);
                order.push_back(v);
                color.push_back(c);
                clear_bit(avail, v);
                clear_bit(uncolored, v);
                for (std::size_t i = 0; i < avail.size(); ++i) avail[i] &= ~g.row(v)[i];
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best) return;
            int v = order[i];
            expand(and_bits(p, g.row(v)), rsize + 1);
            clear_bit(p, v);
        }
    }

    bool exists(Bits p, int need) {
        if (need <= 0) return true;
        if (popcount(p) < need) return false;
        std::vector<int> order, color;
        Bits uncolored = p;
        int c = 0;
        while (any(uncolored)) {
            ++c;
            Bits avail = uncolored;
            while (any(avail)) {
                int v = first_bit(avail);
                order.push_back(v);
                color.push_back(c);
                clear_bit(avail, v);
                clear_bit(uncolored, v);
                for (std::size_t i = 0; i < avail.size(); ++i) avail[i] &= ~g.row(v)[i];
            }
        }
        if (c < need) return false;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (color[i] < need) return false;
            int v = order[i];
            if (exists(and_bits(p, g.row(v)), need - 1)) return true;
            clear_bit(p, v);
        }
        return false;
    }
};

Bits full_bits(int n) {
    Bits b((n + 63) / 64, 0);
    for (int v = 0; v < n; ++v) b[v >> 6] |= std::uint64_t(1) << (v & 63);
    return b;
}

BitGraph complement(const BitGraph& g) {
    BitGraph c(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

bool enum_rec(const BitGraph& g, int target, std::size_t cap, Bits p, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == target) {
        if (out.size() >= cap) return false;
        out.push_back(cur);
        return true;
    }
    if (static_cast<int>(cur.size()) + popcount(p) < target) return true;
    Bits rest = p;
    while (any(rest)) {
        int v = first_bit(rest);
        clear_bit(rest, v);
        cur.push_back(v);
        Bits p2 = and_bits(rest, g.row(v));  // only vertices after v: lex order
        if (!enum_rec(g, target, cap, p2, cur, out)) return false;
        cur.pop_back();
    }
    return true;
}

}  // namespace

int max_clique_size(const BitGraph& g) {
    if (g.size() == 0) return 0;
    Mc mc{g};
    mc.expand(full_bits(g.size()), 0);
    return mc.best;
}

std::vector<int> max_clique_lex(const BitGraph& g) {
    int w = max_clique_size(g);
    std::vector<int> out;
    Bits p = full_bits(g.size());
    Mc mc{g};
    while (static_cast<int>(out.size()) < w) {
        for (int v = 0; v < g.size(); ++v) {
            if (!test_bit(p, v)) continue;
            Bits p2 = and_bits(p, g.row(v));
            for (int u = 0; u <= v; ++u) clear_bit(p2, u);
            if (mc.exists(p2, w - static_cast<int>(out.size()) - 1)) {
                out.push_back(v);
                p = p2;
                break;
            }
            clear_bit(p, v);
        }
    }
    return out;
}

bool enumerate_cliques_of_size(const BitGraph& g, int target, std::size_t cap,
                               std::vector<std::vector<int>>& out) {
    out.clear();
    if (target == 0) {
        out.push_back({});
        return true;
    }
    std::vector<int> cur;
    return enum_rec(g, target, cap, full_bits(g.size()), cur, out);
}

int max_independent_set_size(const BitGraph& g) { return max_clique_size(complement(g)); }

std::vector<int> max_independent_set_lex(const BitGraph& g) {
    return max_clique_lex(complement(g));
}

}  // namespace hexaf::solve
