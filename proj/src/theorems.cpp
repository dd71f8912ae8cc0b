#include "hexaf/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "hexaf/errors.hpp"
#include "hexaf/generators.hpp"
#include "hexaf/json_io.hpp"
#include "hexaf/solvers.hpp"

namespace hexaf {

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        case Status::hypothesis_not_met: return "hypothesis-not-met";
        case Status::skipped_budget: return "skipped-budget";
    }
    return "?";
}

nlohmann::json verdict_to_json(const Verdict& v) {
    return {{"theorem", v.theorem},
            {"instance", v.instance},
            {"status", to_string(v.status)},
            {"witness", v.payload}};
}

namespace {

nlohmann::json matching_json(const HexSystem& h, const Matching& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int e : m.edges) a.push_back({h.edges[e].first, h.edges[e].second});
    return a;
}

nlohmann::json edge_set_json(const HexSystem& h, const std::vector<int>& edges) {
    nlohmann::json a = nlohmann::json::array();
    for (int e : edges) a.push_back({h.edges[e].first, h.edges[e].second});
    return a;
}

// fails verdicts must be reproducible on their own.
void attach_repro(nlohmann::json& payload, const HexSystem& h) {
    payload["cells"] = cells_to_json(h.cells)["cells"];
}

Verdict no_matching_verdict(const std::string& theorem, const HexSystem& h,
                            const std::string& instance) {
    Verdict v{theorem, instance, Status::hypothesis_not_met,
              {{"reason", "no perfect matching"}, {"vertices", h.num_verts()}}};
    return v;
}

}  // namespace

SystemSweep compute_sweep(const HexSystem& h, const AltCycleOptions& opt) {
    SystemSweep s;
    s.matchings = enumerate_matchings(h);
    s.rows.reserve(s.matchings.size());
    for (const Matching& m : s.matchings) {
        std::vector<AltCycle> cycles = enumerate_alt_cycles(h, m, opt);
        MatchingRow row;
        row.f = forcing_number(h, m, cycles);
        row.af = anti_forcing_number(h, m, cycles);
        row.c = max_disjoint_cycles(cycles);
        row.cp = max_compatible_set(h, m, cycles);
        row.fr = static_cast<int>(alternating_hexagons(h, m).size());
        s.F = std::max(s.F, row.f);
        s.Af = std::max(s.Af, row.af);
        s.Fr = std::max(s.Fr, row.fr);
        s.rows.push_back(row);
    }
    return s;
}

std::vector<Verdict> verify_minimax(const HexSystem& h, const SystemSweep& s,
                                    const std::string& instance) {
    if (s.matchings.empty()) return {no_matching_verdict("minimax", h, instance)};
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const MatchingRow& r = s.rows[i];
        bool ok = r.f == r.c && r.af == r.cp;
        nlohmann::json payload{{"matching", i}, {"f", r.f},   {"c", r.c},
                               {"af", r.af},    {"cp", r.cp}, {"fr", r.fr}};
        if (!ok) {
            attach_repro(payload, h);
            payload["matching_edges"] = matching_json(h, s.matchings[i]);
            try {
                std::vector<AltCycle> cycles = enumerate_alt_cycles(h, s.matchings[i]);
                std::vector<int> fc, afc;
                forcing_number(h, s.matchings[i], cycles, &fc);
                anti_forcing_number(h, s.matchings[i], cycles, &afc);
                payload["forcing_cert"] = edge_set_json(h, fc);
                payload["anti_forcing_cert"] = edge_set_json(h, afc);
            } catch (const BudgetError&) {
                payload["certificates"] = "unavailable under cycle budget";
            }
        }
        out.push_back({"minimax", instance, ok ? Status::holds : Status::fails, payload});
    }
    return out;
}

std::vector<Verdict> verify_clar_fries(const HexSystem& h, const SystemSweep& s,
                                       const std::string& instance) {
    if (s.matchings.empty()) return {no_matching_verdict("clar-fries", h, instance)};
    std::vector<Verdict> out;

    std::vector<int> clar_cells;
    int cl = clar_number(h, &clar_cells);
    {
        nlohmann::json payload{{"check", "max-forcing-equals-clar"}, {"F", s.F}, {"Cl", cl}};
        nlohmann::json cells = nlohmann::json::array();
        for (int c : clar_cells) cells.push_back({h.cells[c].q, h.cells[c].r});
        payload["clar_cells"] = cells;
        if (s.F != cl) attach_repro(payload, h);
        out.push_back({"clar-fries", instance, s.F == cl ? Status::holds : Status::fails, payload});
    }
    {
        nlohmann::json payload{{"check", "max-anti-forcing-equals-fries"},
                               {"Af", s.Af},
                               {"Fr", s.Fr}};
        if (s.Af != s.Fr) attach_repro(payload, h);
        out.push_back(
            {"clar-fries", instance, s.Af == s.Fr ? Status::holds : Status::fails, payload});
    }

    // Matchings attaining the maximum forcing number admit that many pairwise
    // disjoint alternating hexagons; the packing reuses the cycle solver with
    // candidates narrowed to hexagons.
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (s.rows[i].f != s.F) continue;
        std::vector<int> hexes = alternating_hexagons(h, s.matchings[i]);
        std::vector<AltCycle> hex_cycles;
        hex_cycles.reserve(hexes.size());
        for (int cid : hexes) hex_cycles.push_back(make_hexagon_cycle(h, s.matchings[i], cid));
        std::vector<int> picked;
        int packed = max_disjoint_cycles(hex_cycles, &picked);
        bool ok = packed >= s.F;
        nlohmann::json payload{{"check", "disjoint-hexagons-at-max-forcing"},
                               {"matching", i},
                               {"required", s.F},
                               {"packed", packed}};
        nlohmann::json cells = nlohmann::json::array();
        for (int idx : picked) cells.push_back({h.cells[hexes[idx]].q, h.cells[hexes[idx]].r});
        payload["hexagons"] = cells;
        if (!ok) {
            attach_repro(payload, h);
            payload["matching_edges"] = matching_json(h, s.matchings[i]);
        }
        out.push_back({"clar-fries", instance, ok ? Status::holds : Status::fails, payload});
    }
    return out;
}

std::vector<Verdict> verify_main(const HexSystem& h, const SystemSweep& s,
                                 const std::string& instance) {
    if (s.matchings.empty()) return {no_matching_verdict("main", h, instance)};
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const MatchingRow& r = s.rows[i];
        nlohmann::json payload{{"matching", i}, {"af", r.af}, {"fr", r.fr}, {"Af", s.Af}};
        if (r.af < s.Af - 1) {
            out.push_back({"main", instance, Status::hypothesis_not_met, payload});
            continue;
        }
        bool ok = r.af == r.fr;
        if (!ok) {
            attach_repro(payload, h);
            payload["matching_edges"] = matching_json(h, s.matchings[i]);
        }
        out.push_back({"main", instance, ok ? Status::holds : Status::fails, payload});
    }
    return out;
}

std::vector<Verdict> verify_structure(const HexSystem& h, const SystemSweep& s,
                                      const std::string& instance, const VerifyOptions& opt) {
    if (s.matchings.empty()) return {no_matching_verdict("structure", h, instance)};
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const MatchingRow& r = s.rows[i];
        if (r.af < s.Af - 1) {
            out.push_back({"structure", instance, Status::hypothesis_not_met,
                           {{"matching", i}, {"af", r.af}, {"Af", s.Af}}});
            continue;
        }
        try {
            std::vector<AltCycle> cycles = enumerate_alt_cycles(h, s.matchings[i], opt.cycles);
            std::vector<char> mask = edge_mask(h, s.matchings[i]);
            int n = static_cast<int>(cycles.size());
            solve::BitGraph g(n);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (compatible(h, mask, cycles[a], cycles[b]) &&
                        non_crossing(cycles[a], cycles[b]))
                        g.add_edge(a, b);
            int smax = solve::max_clique_size(g);
            {
                // The maximum non-crossing compatible family must be as large
                // as the anti-forcing number; a gap means a broken predicate.
                nlohmann::json payload{{"check", "noncrossing-maximum-matches-af"},
                                       {"matching", i},
                                       {"size", smax},
                                       {"af", r.af}};
                if (smax != r.af) {
                    attach_repro(payload, h);
                    payload["matching_edges"] = matching_json(h, s.matchings[i]);
                }
                out.push_back({"structure", instance,
                               smax == r.af ? Status::holds : Status::fails, payload});
            }
            std::vector<std::vector<int>> sets;
            bool complete = solve::enumerate_cliques_of_size(g, smax, opt.max_sets, sets);
            for (std::size_t j = 0; j < sets.size(); ++j) {
                bool disjoint = true;
                for (std::size_t a = 0; a < sets[j].size() && disjoint; ++a)
                    for (std::size_t b = a + 1; b < sets[j].size() && disjoint; ++b) {
                        const auto& ia = cycles[sets[j][a]].interior;
                        const auto& ib = cycles[sets[j][b]].interior;
                        std::vector<int> common;
                        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                              std::back_inserter(common));
                        if (!common.empty()) disjoint = false;
                    }
                bool chains = std::all_of(sets[j].begin(), sets[j].end(), [&](int idx) {
                    return is_linear_chain_interior(h, cycles[idx]);
                });
                nlohmann::json payload{{"check", "maximum-set-structure"},
                                       {"matching", i},
                                       {"set", j},
                                       {"size", smax},
                                       {"disjoint_interiors", disjoint},
                                       {"linear_chain_interiors", chains}};
                if (!(disjoint && chains)) {
                    attach_repro(payload, h);
                    payload["matching_edges"] = matching_json(h, s.matchings[i]);
                    nlohmann::json cyc = nlohmann::json::array();
                    for (int idx : sets[j]) cyc.push_back(clockwise_vseq(cycles[idx]));
                    payload["set_cycles"] = cyc;
                }
                out.push_back({"structure", instance,
                               disjoint && chains ? Status::holds : Status::fails, payload});
            }
            if (!complete)
                out.push_back({"structure", instance, Status::skipped_budget,
                               {{"matching", i},
                                {"enumerated", sets.size()},
                                {"cap", opt.max_sets}}});
        } catch (const BudgetError& e) {
            out.push_back({"structure", instance, Status::skipped_budget,
                           {{"matching", i}, {"reason", e.what()}}});
        }
    }
    return out;
}

Verdict verify_af1(const HexSystem& h, const SystemSweep& s, const std::string& instance) {
    if (s.matchings.empty()) return no_matching_verdict("af1", h, instance);
    int min_af = s.rows[0].af;
    for (const MatchingRow& r : s.rows) min_af = std::min(min_af, r.af);
    bool tp = is_truncated_parallelogram(h.cells);
    bool ok = (min_af == 1) == tp;
    nlohmann::json payload{{"min_af", min_af}, {"truncated_parallelogram", tp}};
    if (!ok) attach_repro(payload, h);
    return {"af1", instance, ok ? Status::holds : Status::fails, payload};
}

bool has_nice_triphenylene(const HexSystem& h, TriphenylenePlacement* w) {
    for (int c = 0; c < h.num_cells(); ++c) {
        for (int parity = 0; parity < 2; ++parity) {
            std::array<int, 3> outer;
            bool all = true;
            for (int k = 0; k < 3 && all; ++k) {
                outer[k] = h.cell_id(h.cells[c] + kNeighbors[parity + 2 * k]);
                all = outer[k] >= 0;
            }
            if (!all) continue;
            std::vector<int> vs;
            vs.reserve(24);
            for (int v : h.cell_verts[c]) vs.push_back(v);
            for (int o : outer)
                for (int v : h.cell_verts[o]) vs.push_back(v);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            if (vs.size() != 18) throw std::logic_error("triphenylene placement has wrong size");
            if (!is_nice(h, vs)) continue;
            if (w) *w = {c, outer};
            return true;
        }
    }
    return false;
}

Verdict verify_triphenylene(const HexSystem& h, const SystemSweep& s,
                            const std::string& instance) {
    if (s.matchings.empty()) return no_matching_verdict("triphenylene", h, instance);
    TriphenylenePlacement w;
    bool nice = has_nice_triphenylene(h, &w);
    int bad = -1;
    for (std::size_t i = 0; i < s.rows.size() && bad < 0; ++i)
        if (s.rows[i].af != s.rows[i].fr) bad = static_cast<int>(i);
    bool ok = nice == (bad >= 0);
    nlohmann::json payload{{"nice_triphenylene", nice}, {"all_af_equal_fr", bad < 0}};
    if (nice) {
        payload["placement"] = {{"center", {h.cells[w.center].q, h.cells[w.center].r}},
                                {"outer",
                                 {{h.cells[w.outer[0]].q, h.cells[w.outer[0]].r},
                                  {h.cells[w.outer[1]].q, h.cells[w.outer[1]].r},
                                  {h.cells[w.outer[2]].q, h.cells[w.outer[2]].r}}}};
    }
    if (bad >= 0) {
        payload["gap_matching"] = bad;
        payload["af"] = s.rows[bad].af;
        payload["fr"] = s.rows[bad].fr;
    }
    if (!ok) attach_repro(payload, h);
    return {"triphenylene", instance, ok ? Status::holds : Status::fails, payload};
}

bool has_nice_coronene(const HexSystem& h, Cell* center) {
    for (int c = 0; c < h.num_cells(); ++c) {
        std::vector<int> vs;
        vs.reserve(42);
        for (int v : h.cell_verts[c]) vs.push_back(v);
        bool all = true;
        for (Cell d : kNeighbors) {
            int id = h.cell_id(h.cells[c] + d);
            if (id < 0) {
                all = false;
                break;
            }
            for (int v : h.cell_verts[id]) vs.push_back(v);
        }
        if (!all) continue;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs.size() != 24) throw std::logic_error("coronene placement has wrong size");
        if (!is_nice(h, vs)) continue;
        if (center) *center = h.cells[c];
        return true;
    }
    return false;
}

Verdict verify_sextet_count(const HexSystem& h, const SystemSweep& s,
                            const std::string& instance) {
    if (s.matchings.empty()) return no_matching_verdict("sextet", h, instance);
    BigInt k = s.matchings.size();
    BigInt r = sextet_count(h);
    Cell center{0, 0};
    bool nice = has_nice_coronene(h, &center);
    bool equal = r == k;
    bool ok = r <= k && equal == (kSextetEqualityIffNoNiceCoronene ? !nice : nice);
    nlohmann::json payload{
        {"r", r.str()}, {"k", k.str()}, {"nice_coronene", nice}, {"r_equals_k", equal}};
    if (nice) payload["coronene_center"] = {center.q, center.r};
    if (!ok) attach_repro(payload, h);
    return {"sextet", instance, ok ? Status::holds : Status::fails, payload};
}

Verdict validate_rn(const HexSystem& h, int n, const SystemSweep& s,
                    const std::string& instance) {
    if (s.matchings.empty()) return no_matching_verdict("rn", h, instance);
    bool count_ok = h.num_cells() == 2 * n + 4;
    int found = -1;
    for (std::size_t i = 0; i < s.rows.size() && found < 0; ++i)
        if (s.rows[i].fr == 2 * n + 1 && s.rows[i].af == 2 * n + 2) found = static_cast<int>(i);
    bool maxima_ok = s.Af == 2 * n + 4 && s.Fr == 2 * n + 4;
    bool tri = has_nice_triphenylene(h);
    bool ok = count_ok && found >= 0 && maxima_ok && tri;
    nlohmann::json payload{{"n", n},
                           {"hexagons", h.num_cells()},
                           {"hexagon_count_ok", count_ok},
                           {"gap_matching", found},
                           {"Af", s.Af},
                           {"Fr", s.Fr},
                           {"maxima_ok", maxima_ok},
                           {"nice_triphenylene", tri}};
    if (!ok) attach_repro(payload, h);
    return {"rn", instance, ok ? Status::holds : Status::fails, payload};
}

}  // namespace hexaf
