// End-to-end checks of the toolkit's headline guarantees on concrete
// instances. Prints one line per criterion; exits nonzero if any fail.

#include <algorithm>
#include <climits>
#include <exception>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hexaf/altcycle.hpp"
#include "hexaf/generators.hpp"
#include "hexaf/invariants.hpp"
#include "hexaf/matching.hpp"
#include "hexaf/theorems.hpp"
#include "oracles.hpp"

using namespace hexaf;

namespace {

struct Criterion {
    std::string text;
    bool pass = false;
    std::string detail;
};

// Shared sweep over the census so the per-matching work is done once.
struct CensusFindings {
    bool ran = false;
    std::string error;
    bool minimax_ok = true;      // f = c and af = c' (size <= 6)
    bool maxima_ok = true;       // F = Cl and Af = Fr (size <= 6)
    bool top_levels_ok = true;   // af = fr at levels Af, Af-1 (size <= 7)
    bool af1_ok = true;          // min af = 1 iff truncated parallelogram (size <= 6)
    bool tri_ok = true;          // nice triphenylene iff some af > fr (size <= 6)
    bool certs_ok = true;        // certificates re-validated (size <= 6)
    bool packing_ok = true;      // F disjoint alternating hexagons at f = F (size <= 7)
    std::string why_minimax, why_maxima, why_top, why_af1, why_tri, why_certs, why_packing;
    long systems = 0, matchings = 0, certificates = 0;
};

void note(bool& flag, std::string& why, const std::string& msg) {
    if (flag) why = msg;
    flag = false;
}

void sweep_system(const HexSystem& h, int size, int idx, CensusFindings& out) {
    std::string name = "h" + std::to_string(size) + "_" + std::to_string(idx);
    std::vector<Matching> ms = enumerate_matchings(h);
    if (ms.empty()) return;
    ++out.systems;
    bool small = size <= 6;
    int F = 0, Af = 0, Fr = 0, min_af = INT_MAX;
    std::vector<int> fs(ms.size()), afs(ms.size()), frs(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        ++out.matchings;
        std::vector<AltCycle> cycles = enumerate_alt_cycles(h, ms[i]);
        std::vector<int> fcert, afcert;
        int f = forcing_number(h, ms[i], cycles, small ? &fcert : nullptr);
        int af = anti_forcing_number(h, ms[i], cycles, small ? &afcert : nullptr);
        int fr = static_cast<int>(alternating_hexagons(h, ms[i]).size());
        fs[i] = f;
        afs[i] = af;
        frs[i] = fr;
        F = std::max(F, f);
        Af = std::max(Af, af);
        Fr = std::max(Fr, fr);
        min_af = std::min(min_af, af);
        if (!small) continue;
        if (f != max_disjoint_cycles(cycles) || af != max_compatible_set(h, ms[i], cycles))
            note(out.minimax_ok, out.why_minimax, name + " matching " + std::to_string(i));
        // Re-validate both certificates from the outside.
        out.certificates += 2;
        bool f_ok = static_cast<int>(fcert.size()) == f;
        for (int e : fcert)
            if (!ms[i].contains(e)) f_ok = false;
        for (const AltCycle& c : cycles) {
            bool hit = false;
            for (int e : fcert)
                if (std::binary_search(c.eset.begin(), c.eset.end(), e)) hit = true;
            if (!hit) f_ok = false;
        }
        bool af_ok = static_cast<int>(afcert.size()) == af;
        for (int e : afcert)
            if (ms[i].contains(e)) af_ok = false;
        if (af_ok && !has_unique_pm(h, afcert, ms[i])) af_ok = false;
        if (!f_ok || !af_ok)
            note(out.certs_ok, out.why_certs, name + " matching " + std::to_string(i));
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (afs[i] >= Af - 1 && afs[i] != frs[i])
            note(out.top_levels_ok, out.why_top,
                 name + " matching " + std::to_string(i) + " af=" + std::to_string(afs[i]) +
                     " fr=" + std::to_string(frs[i]));
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (fs[i] != F) continue;
        std::vector<AltCycle> hexes;
        for (int cid : alternating_hexagons(h, ms[i]))
            hexes.push_back(make_hexagon_cycle(h, ms[i], cid));
        if (max_disjoint_cycles(hexes) < F)
            note(out.packing_ok, out.why_packing, name + " matching " + std::to_string(i));
    }
    if (!small) return;
    if (clar_number(h) != F || Af != Fr)
        note(out.maxima_ok, out.why_maxima,
             name + " F=" + std::to_string(F) + " Cl=" + std::to_string(clar_number(h)) +
                 " Af=" + std::to_string(Af) + " Fr=" + std::to_string(Fr));
    if ((min_af == 1) != is_truncated_parallelogram(h.cells))
        note(out.af1_ok, out.why_af1, name + " min_af=" + std::to_string(min_af));
    bool gap = false;
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (afs[i] != frs[i]) gap = true;
    if (has_nice_triphenylene(h) != gap)
        note(out.tri_ok, out.why_tri, name);
}

CensusFindings run_census_sweep() {
    CensusFindings out;
    try {
        for_each_system(7, [&](const HexSystem& h, int size, int idx) {
            sweep_system(h, size, idx, out);
        });
        out.ran = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

bool census_criterion(const CensusFindings& cf, bool ok, const std::string& why,
                      std::string& detail) {
    if (!cf.ran) {
        detail = "census sweep aborted: " + cf.error;
        return false;
    }
    if (!ok) {
        detail = "first counterexample: " + why;
        return false;
    }
    return true;
}

// Does this system have exactly one matching after deleting some single
// edge, while having at least two to begin with? Equivalent to min af = 1
// without sweeping all matchings.
bool min_af_is_one(const HexSystem& h) {
    return count_matchings_up_to(h, std::vector<int>{}, 2) == 2 && has_anti_forcing_edge(h);
}

}  // namespace

int main() {
    std::vector<Criterion> crit(11);
    crit[0].text = "coronene: max forcing 3, with a matching at f=2 and one alternating hexagon";
    crit[1].text = "triphenylene: a matching with anti-forcing 2 but one alternating hexagon";
    crit[2].text = "f=c and af=c' for every matching, census up to 6 hexagons";
    crit[3].text = "max forcing = Clar and max anti-forcing = Fries, census up to 6 hexagons";
    crit[4].text = "af=fr at the top two anti-forcing levels, census up to 7 hexagons";
    crit[5].text = "single anti-forcing edge exactly on truncated parallelograms";
    crit[6].text = "staircase family n=1,2,3: counts, gap matching, maxima, nice triphenylene";
    crit[7].text = "nice triphenylene exactly where some matching has af>fr";
    crit[8].text = "enumeration and optima match brute-force oracles, census up to 4 hexagons";
    crit[9].text = "every forcing/anti-forcing certificate re-validates";
    crit[10].text = "every max-forcing matching packs that many disjoint alternating hexagons";

    auto guard = [](Criterion& c, auto&& body) {
        try {
            c.pass = body(c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
    };

    CensusFindings cf = run_census_sweep();

    guard(crit[0], [&](std::string& d) {
        SystemSweep s = compute_sweep(gen_named(Named::coronene));
        int F = 0;
        bool f2fr1 = false;
        for (const MatchingRow& r : s.rows) {
            F = std::max(F, r.f);
            if (r.f == 2 && r.fr == 1) f2fr1 = true;
        }
        if (F != 3) {
            d = "max forcing came out " + std::to_string(F);
            return false;
        }
        if (!f2fr1) {
            d = "no matching with f=2 and fr=1";
            return false;
        }
        return true;
    });

    guard(crit[1], [&](std::string& d) {
        SystemSweep s = compute_sweep(gen_named(Named::triphenylene));
        for (const MatchingRow& r : s.rows)
            if (r.af == 2 && r.fr == 1) return true;
        d = "no matching with af=2 and fr=1";
        return false;
    });

    guard(crit[2], [&](std::string& d) {
        return census_criterion(cf, cf.minimax_ok, cf.why_minimax, d);
    });
    guard(crit[3], [&](std::string& d) {
        return census_criterion(cf, cf.maxima_ok, cf.why_maxima, d);
    });
    guard(crit[4], [&](std::string& d) {
        return census_criterion(cf, cf.top_levels_ok, cf.why_top, d);
    });

    guard(crit[5], [&](std::string& d) {
        if (!census_criterion(cf, cf.af1_ok, cf.why_af1, d)) return false;
        // Two larger spot checks, decided without sweeping every matching.
        for (std::vector<int> rows : {std::vector<int>{6, 6, 5, 4}, std::vector<int>{6, 6, 6, 6}}) {
            HexSystem h = gen_truncated_parallelogram(rows);
            if (!is_truncated_parallelogram(h.cells)) {
                d = "generated staircase not recognized";
                return false;
            }
            if (!min_af_is_one(h)) {
                d = "spot check failed for a 4-row truncated parallelogram";
                return false;
            }
        }
        return true;
    });

    guard(crit[6], [&](std::string& d) {
        for (int n = 1; n <= 3; ++n) {
            HexSystem h = gen_rn(n);
            SystemSweep s = compute_sweep(h);
            Verdict v = validate_rn(h, n, s, "rn");
            if (v.status != Status::holds) {
                d = "n=" + std::to_string(n) + ": " + v.payload.dump();
                return false;
            }
        }
        return true;
    });

    guard(crit[7], [&](std::string& d) {
        if (!census_criterion(cf, cf.tri_ok, cf.why_tri, d)) return false;
        HexSystem r1 = gen_rn(1);
        SystemSweep s = compute_sweep(r1);
        Verdict v = verify_triphenylene(r1, s, "r1");
        if (v.status != Status::holds) {
            d = "staircase n=1: " + v.payload.dump();
            return false;
        }
        return true;
    });

    guard(crit[8], [&](std::string& d) {
        for (const HexSystem& h : census(4)) {
            std::vector<Matching> ms = enumerate_matchings(h);
            if (ms != oracle::brute_matchings(h)) {
                d = "matching lists differ";
                return false;
            }
            if (!ms.empty() && clar_number(h) != oracle::brute_clar(h)) {
                d = "clar numbers differ";
                return false;
            }
            for (const Matching& m : ms) {
                std::vector<AltCycle> cs = enumerate_alt_cycles(h, m);
                std::set<std::vector<int>> esets;
                for (const AltCycle& c : cs) esets.insert(c.eset);
                std::vector<std::vector<int>> brute = oracle::brute_alt_cycles(h, m);
                if (esets != std::set<std::vector<int>>(brute.begin(), brute.end())) {
                    d = "cycle lists differ";
                    return false;
                }
                if (max_disjoint_cycles(cs) != oracle::brute_c(h, m) ||
                    max_compatible_set(h, m, cs) != oracle::brute_cp(h, m)) {
                    d = "cycle family optima differ";
                    return false;
                }
            }
        }
        return true;
    });

    guard(crit[9], [&](std::string& d) {
        if (!census_criterion(cf, cf.certs_ok, cf.why_certs, d)) return false;
        // Also on the named systems and the first staircases.
        std::vector<HexSystem> extra;
        for (Named w : {Named::benzene, Named::naphthalene, Named::anthracene,
                        Named::triphenylene, Named::coronene})
            extra.push_back(gen_named(w));
        for (int n = 1; n <= 3; ++n) extra.push_back(gen_rn(n));
        for (const HexSystem& h : extra)
            for (const Matching& m : enumerate_matchings(h)) {
                std::vector<AltCycle> cycles = enumerate_alt_cycles(h, m);
                std::vector<int> fcert, afcert;
                forcing_number(h, m, cycles, &fcert);
                anti_forcing_number(h, m, cycles, &afcert);
                if (!has_unique_pm(h, afcert, m)) {
                    d = "anti-forcing certificate fails to isolate";
                    return false;
                }
                for (const AltCycle& c : cycles) {
                    bool hit = false;
                    for (int e : fcert)
                        if (std::binary_search(c.eset.begin(), c.eset.end(), e)) hit = true;
                    if (!hit) {
                        d = "forcing certificate misses a cycle";
                        return false;
                    }
                }
            }
        return true;
    });

    guard(crit[10], [&](std::string& d) {
        return census_criterion(cf, cf.packing_ok, cf.why_packing, d);
    });

    int failures = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        bool p = crit[i].pass;
        std::cout << (p ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << crit[i].text;
        if (!p && !crit[i].detail.empty()) std::cout << " — " << crit[i].detail;
        std::cout << "\n";
        failures += p ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria pass" : "criteria failing") << " ("
              << cf.systems << " census systems, " << cf.matchings << " matchings, "
              << cf.certificates << " certificates)\n";
    return failures == 0 ? 0 : 1;
}
