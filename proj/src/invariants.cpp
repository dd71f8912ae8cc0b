#include "hexaf/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hexaf/solvers.hpp"

namespace hexaf {

namespace {

std::vector<std::vector<int>> cycle_edge_sets(const HexSystem& h, const Matching& m,
                                              const std::vector<AltCycle>& cycles, bool matched) {
    std::vector<char> in_m = edge_mask(h, m);
    std::vector<std::vector<int>> sets;
    sets.reserve(cycles.size());
    for (const AltCycle& c : cycles) {
        std::vector<int> s;
        for (int e : c.eset)
            if ((in_m[e] != 0) == matched) s.push_back(e);
        sets.push_back(std::move(s));
    }
    return sets;
}

bool share_vertex(const AltCycle& a, const AltCycle& b) {
    auto i = a.vset.begin();
    auto j = b.vset.begin();
    while (i != a.vset.end() && j != b.vset.end()) {
        if (*i == *j) return true;
        (*i < *j) ? ++i : ++j;
    }
    return false;
}

}  // namespace

int forcing_number(const HexSystem& h, const Matching& m, const std::vector<AltCycle>& cycles,
                   std::vector<int>* cert) {
    auto sets = cycle_edge_sets(h, m, cycles, true);
    int f = solve::min_hitting_set_size(sets);
    if (cert) {
        *cert = solve::min_hitting_set_lex(sets);
        for (const auto& s : sets)
            if (std::find_first_of(s.begin(), s.end(), cert->begin(), cert->end()) == s.end())
                throw std::logic_error("forcing certificate misses a cycle");
    }
    return f;
}

int anti_forcing_number(const HexSystem& h, const Matching& m,
                        const std::vector<AltCycle>& cycles, std::vector<int>* cert) {
    auto sets = cycle_edge_sets(h, m, cycles, false);
    int af = solve::min_hitting_set_size(sets);
    if (cert) {
        *cert = solve::min_hitting_set_lex(sets);
        if (!has_unique_pm(h, *cert, m))
            throw std::logic_error("anti-forcing certificate does not isolate the matching");
    }
    return af;
}

int max_disjoint_cycles(const std::vector<AltCycle>& cycles, std::vector<int>* witness) {
    int n = static_cast<int>(cycles.size());
    solve::BitGraph conflict(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (share_vertex(cycles[i], cycles[j])) conflict.add_edge(i, j);
    if (witness) {
        *witness = solve::max_independent_set_lex(conflict);
        return static_cast<int>(witness->size());
    }
    return solve::max_independent_set_size(conflict);
}

int max_compatible_set(const HexSystem& h, const Matching& m, const std::vector<AltCycle>& cycles,
                       std::vector<int>* witness) {
    int n = static_cast<int>(cycles.size());
    std::vector<char> mask = edge_mask(h, m);
    solve::BitGraph comp(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (compatible(h, mask, cycles[i], cycles[j])) comp.add_edge(i, j);
    if (witness) {
        *witness = solve::max_clique_lex(comp);
        return static_cast<int>(witness->size());
    }
    return solve::max_clique_size(comp);
}

MatchingRow matching_row(const HexSystem& h, const Matching& m, const AltCycleOptions& opt,
                         bool with_certs) {
    std::vector<AltCycle> cycles = enumerate_alt_cycles(h, m, opt);
    MatchingRow row;
    row.f = forcing_number(h, m, cycles, with_certs ? &row.f_cert : nullptr);
    row.af = anti_forcing_number(h, m, cycles, with_certs ? &row.af_cert : nullptr);
    row.c = max_disjoint_cycles(cycles);
    row.cp = max_compatible_set(h, m, cycles);
    row.fr = static_cast<int>(alternating_hexagons(h, m).size());
    if (row.f != row.c) throw std::logic_error("forcing number differs from disjoint-cycle maximum");
    if (row.af != row.cp)
        throw std::logic_error("anti-forcing number differs from compatible-set maximum");
    if (row.af < row.fr) throw std::logic_error("anti-forcing number below alternating hexagon count");
    return row;
}

namespace {

// Disjoint hexagon sets that leave a matchable graph form an independence
// system (dropping a hexagon keeps the rest resonant), so the search can cut
// every branch whose current set fails the matchability test.
struct ClarSearch {
    const HexSystem& h;
    std::vector<int> chosen_cells;
    std::vector<int> removed_verts;
    int best = -1;
    std::vector<int>* best_cells = nullptr;

    bool independent(int cell) const {
        for (int c : chosen_cells)
            for (int d : h.cell_adj[c])
                if (d == cell) return false;
        for (int c : chosen_cells)
            if (c == cell) return false;
        return true;
    }

    bool nice_with(int cell) {
        std::vector<int> vs = removed_verts;
        for (int v : h.cell_verts[cell]) vs.push_back(v);
        return is_nice(h, vs);
    }

    void push(int cell) {
        chosen_cells.push_back(cell);
        for (int v : h.cell_verts[cell]) removed_verts.push_back(v);
    }
    void pop() {
        chosen_cells.pop_back();
        removed_verts.resize(removed_verts.size() - 6);
    }

    void maximize(int start) {
        if (static_cast<int>(chosen_cells.size()) > best) {
            best = static_cast<int>(chosen_cells.size());
            if (best_cells) *best_cells = chosen_cells;
        }
        if (static_cast<int>(chosen_cells.size()) + (h.num_cells() - start) <= best) return;
        for (int c = start; c < h.num_cells(); ++c) {
            if (!independent(c) || !nice_with(c)) continue;
            push(c);
            maximize(c + 1);
            pop();
        }
    }

    bool feasible(int start, int need) {
        if (need == 0) return true;
        if (h.num_cells() - start < need) return false;
        for (int c = start; c < h.num_cells(); ++c) {
            if (!independent(c) || !nice_with(c)) continue;
            push(c);
            bool ok = feasible(c + 1, need - 1);
            pop();
            if (ok) return true;
        }
        return false;
    }

    void count_all(int start, BigInt& acc) {
        ++acc;
        for (int c = start; c < h.num_cells(); ++c) {
            if (!independent(c) || !nice_with(c)) continue;
            push(c);
            count_all(c + 1, acc);
            pop();
        }
    }
};

}  // namespace

int clar_number(const HexSystem& h, std::vector<int>* witness_cells) {
    if (!has_perfect_matching(h)) throw std::invalid_argument("no perfect matching");
    ClarSearch cs{h, {}, {}, -1, nullptr};
    cs.maximize(0);
    int cl = cs.best;
    if (witness_cells) {
        // Lex smallest optimum: grow the prefix with the smallest viable cell.
        ClarSearch lex{h, {}, {}, -1, nullptr};
        witness_cells->clear();
        int start = 0;
        while (static_cast<int>(witness_cells->size()) < cl) {
            for (int c = start; c < h.num_cells(); ++c) {
                if (!lex.independent(c) || !lex.nice_with(c)) continue;
                lex.push(c);
                if (lex.feasible(c + 1, cl - static_cast<int>(witness_cells->size()) - 1)) {
                    witness_cells->push_back(c);
                    start = c + 1;
                    break;
                }
                lex.pop();
            }
        }
    }
    return cl;
}

BigInt sextet_count(const HexSystem& h) {
    if (!has_perfect_matching(h)) return 0;
    ClarSearch cs{h, {}, {}, -1, nullptr};
    BigInt acc = 0;
    cs.count_all(0, acc);
    return acc;
}

int fries_number(const HexSystem& h, const std::vector<Matching>& ms, int* arg) {
    int best = -1, besti = -1;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        int fr = static_cast<int>(alternating_hexagons(h, ms[i]).size());
        if (fr > best) {
            best = fr;
            besti = static_cast<int>(i);
        }
    }
    if (arg) *arg = besti;
    return best;
}

bool has_anti_forcing_edge(const HexSystem& h) {
    for (int e = 0; e < h.num_edges(); ++e) {
        int banned[] = {e};
        if (count_matchings_up_to(h, banned, 2) == 1) return true;
    }
    return false;
}

InvariantReport compute_report(const HexSystem& h, const ReportOptions& opt) {
    InvariantReport rep;
    rep.cells = h.cells;
    rep.n = h.num_verts();
    rep.m = h.num_edges();
    rep.hexagons = h.num_cells();
    rep.matchings = enumerate_matchings(h);
    rep.k = rep.matchings.size();
    if (rep.matchings.empty()) return rep;
    rep.r = sextet_count(h);
    for (const Matching& m : rep.matchings) {
        MatchingRow row = matching_row(h, m, opt.cycles, opt.with_certs);
        rep.f_spectrum.insert(row.f);
        rep.af_spectrum.insert(row.af);
        rep.F = std::max(rep.F, row.f);
        rep.Af = std::max(rep.Af, row.af);
        rep.Fr = std::max(rep.Fr, row.fr);
        rep.rows.push_back(std::move(row));
    }
    rep.Cl = clar_number(h);
    if (rep.F != rep.Cl) throw std::logic_error("max forcing differs from Clar number");
    if (rep.Af != rep.Fr) throw std::logic_error("max anti-forcing differs from Fries number");
    return rep;
}

namespace {

nlohmann::json edge_pairs(const HexSystem& h, const std::vector<int>& edge_ids) {
    nlohmann::json a = nlohmann::json::array();
    for (int e : edge_ids) a.push_back({h.edges[e].first, h.edges[e].second});
    return a;
}

}  // namespace

nlohmann::json report_to_json(const HexSystem& h, const InvariantReport& rep) {
    nlohmann::json j;
    j["system"] = nlohmann::json::array();
    for (Cell c : rep.cells) j["system"].push_back({c.q, c.r});
    j["vertices"] = nlohmann::json::array();
    for (Point p : h.verts) j["vertices"].push_back({p.x, p.y});
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["hexagons"] = rep.hexagons;
    j["k"] = rep.k.str();
    if (rep.k == 0) {
        j["forcing_spectrum"] = nlohmann::json::array();
        j["anti_forcing_spectrum"] = nlohmann::json::array();
        j["matchings"] = nlohmann::json::array();
        return j;
    }
    j["r"] = rep.r.str();
    j["F"] = rep.F;
    j["Af"] = rep.Af;
    j["Cl"] = rep.Cl;
    j["Fr"] = rep.Fr;
    j["forcing_spectrum"] = rep.f_spectrum;
    j["anti_forcing_spectrum"] = rep.af_spectrum;
    j["matchings"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const MatchingRow& row = rep.rows[i];
        nlohmann::json r;
        r["id"] = i;
        r["edges"] = edge_pairs(h, rep.matchings[i].edges);
        r["f"] = row.f;
        r["c"] = row.c;
        r["af"] = row.af;
        r["cp"] = row.cp;
        r["fr"] = row.fr;
        if (!row.f_cert.empty() || row.f == 0) r["forcing_cert"] = edge_pairs(h, row.f_cert);
        if (!row.af_cert.empty() || row.af == 0)
            r["anti_forcing_cert"] = edge_pairs(h, row.af_cert);
        j["matchings"].push_back(std::move(r));
    }
    return j;
}

std::string report_to_table(const HexSystem& h, const InvariantReport& rep) {
    (void)h;
    std::ostringstream out;
    out << "# hexagons=" << rep.hexagons << " vertices=" << rep.n << " edges=" << rep.m << "\n";
    out << "# k=" << rep.k.str();
    if (rep.k == 0) {
        out << " (no perfect matching)\n";
        return out.str();
    }
    out << " r=" << rep.r.str() << " F=" << rep.F << " Af=" << rep.Af << " Cl=" << rep.Cl
        << " Fr=" << rep.Fr << "\n";
    auto spectrum = [&](const std::set<int>& s) {
        std::string t = "{";
        for (int v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
        return t + "}";
    };
    out << "# forcing spectrum " << spectrum(rep.f_spectrum) << ", anti-forcing spectrum "
        << spectrum(rep.af_spectrum) << "\n";
    out << "id\tf\tc\taf\tc'\tfr\n";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const MatchingRow& r = rep.rows[i];
        out << i << "\t" << r.f << "\t" << r.c << "\t" << r.af << "\t" << r.cp << "\t" << r.fr
            << "\n";
    }
    return out.str();
}

}  // namespace hexaf
