#include <doctest.h>

#include <algorithm>

#include "hexaf/generators.hpp"
#include "hexaf/invariants.hpp"
#include "oracles.hpp"

using namespace hexaf;

TEST_CASE("per-matching numbers agree with subset search") {
    for (const HexSystem& h : census(4)) {
        std::vector<Matching> ms = enumerate_matchings(h);
        for (const Matching& m : ms) {
            std::vector<AltCycle> cs = enumerate_alt_cycles(h, m);
            CHECK(forcing_number(h, m, cs) == oracle::brute_f(h, m, ms));
            CHECK(anti_forcing_number(h, m, cs) == oracle::brute_af(h, m, ms));
            CHECK(max_disjoint_cycles(cs) == oracle::brute_c(h, m));
            CHECK(max_compatible_set(h, m, cs) == oracle::brute_cp(h, m));
        }
    }
}

TEST_CASE("clar number and resonant-set count agree with subset scan") {
    auto check_one = [](const HexSystem& h) {
        CHECK(sextet_count(h) == BigInt(oracle::brute_sextet_count(h)));
        if (has_perfect_matching(h))
            CHECK(clar_number(h) == oracle::brute_clar(h));
        else
            CHECK_THROWS_AS(clar_number(h), std::invalid_argument);
    };
    for (const HexSystem& h : census(4)) check_one(h);
    check_one(gen_named(Named::triphenylene));
    check_one(gen_named(Named::coronene));
}

TEST_CASE("clar witness is valid and lex minimal in size") {
    HexSystem cor = gen_named(Named::coronene);
    std::vector<int> cells;
    int cl = clar_number(cor, &cells);
    CHECK(cl == 3);
    CHECK(static_cast<int>(cells.size()) == cl);
    CHECK(oracle::cells_disjoint(cor, cells));
    CHECK(oracle::brute_nice_cells(cor, cells));
}

TEST_CASE("coronene invariant report") {
    HexSystem h = gen_named(Named::coronene);
    InvariantReport rep = compute_report(h);
    CHECK(rep.k == 20);
    CHECK(rep.r == 19);  // all resonant sets, empty one included
    CHECK(rep.r < rep.k);
    CHECK(rep.F == 3);
    CHECK(rep.Cl == 3);
    CHECK(rep.f_spectrum == std::set<int>{2, 3});
    CHECK(rep.Af == rep.Fr);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].f == rep.rows[i].c);
        CHECK(rep.rows[i].af == rep.rows[i].cp);
        CHECK(rep.rows[i].af >= rep.rows[i].fr);
    }
}

TEST_CASE("benzene has as many resonant sets as matchings") {
    InvariantReport rep = compute_report(gen_named(Named::benzene));
    CHECK(rep.k == 2);
    CHECK(rep.r == 2);
    CHECK(rep.F == 1);
    CHECK(rep.Af == 1);
    CHECK(rep.Cl == 1);
    CHECK(rep.Fr == 1);
}

TEST_CASE("four-ring staircase report") {
    HexSystem h = gen_rn(1);
    InvariantReport rep = compute_report(h);
    CHECK(h.num_cells() == 6);
    CHECK(rep.Af == 6);
    CHECK(rep.Fr == 6);
    CHECK(rep.af_spectrum.count(4) == 1);
    CHECK(rep.af_spectrum.count(6) == 1);
    bool gap_row = false;
    for (const MatchingRow& row : rep.rows)
        if (row.af == 4 && row.fr == 3) gap_row = true;
    CHECK(gap_row);
}

TEST_CASE("certificates do what they claim") {
    auto check_system = [](const HexSystem& h) {
        std::vector<Matching> ms = enumerate_matchings(h);
        for (const Matching& m : ms) {
            std::vector<AltCycle> cs = enumerate_alt_cycles(h, m);
            std::vector<int> fc, afc;
            int f = forcing_number(h, m, cs, &fc);
            int af = anti_forcing_number(h, m, cs, &afc);
            CHECK(static_cast<int>(fc.size()) == f);
            CHECK(static_cast<int>(afc.size()) == af);
            // f-certificate: contained in m and in no other matching.
            for (int e : fc) CHECK(m.contains(e));
            for (const Matching& other : ms) {
                if (other == m) continue;
                bool contains_all = true;
                for (int e : fc)
                    if (!other.contains(e)) contains_all = false;
                CHECK(!contains_all);
            }
            // af-certificate: disjoint from m, and deleting it isolates m.
            for (int e : afc) CHECK(!m.contains(e));
            CHECK(has_unique_pm(h, afc, m));
        }
    };
    check_system(gen_named(Named::naphthalene));
    check_system(gen_named(Named::triphenylene));
    check_system(gen_rn(1));
}

TEST_CASE("fries maximizer index is consistent") {
    HexSystem h = gen_named(Named::coronene);
    std::vector<Matching> ms = enumerate_matchings(h);
    int arg = -1;
    int fr = fries_number(h, ms, &arg);
    REQUIRE(arg >= 0);
    CHECK(static_cast<int>(alternating_hexagons(h, ms[arg]).size()) == fr);
    for (const Matching& m : ms)
        CHECK(static_cast<int>(alternating_hexagons(h, m).size()) <= fr);
}

TEST_CASE("single-edge anti-forcing detection") {
    CHECK(has_anti_forcing_edge(gen_named(Named::benzene)));
    CHECK(has_anti_forcing_edge(gen_linear_chain(3)));
    CHECK(!has_anti_forcing_edge(gen_named(Named::triphenylene)));
    CHECK(!has_anti_forcing_edge(gen_named(Named::coronene)));
}

TEST_CASE("systems without perfect matchings report zeros") {
    HexSystem h = HexSystem::build({{0, 0}, {1, 0}, {1, -1}});
    InvariantReport rep = compute_report(h);
    CHECK(rep.k == 0);
    CHECK(rep.r == 0);
    CHECK(rep.rows.empty());
    CHECK(rep.f_spectrum.empty());
    nlohmann::json j = report_to_json(h, rep);
    CHECK(j["k"] == "0");
}

TEST_CASE("report serialization carries the headline numbers") {
    HexSystem h = gen_named(Named::naphthalene);
    InvariantReport rep = compute_report(h);
    nlohmann::json j = report_to_json(h, rep);
    CHECK(j["k"] == "3");
    CHECK(j["n"] == 10);
    CHECK(j["m"] == 11);
    CHECK(j["matchings"].size() == 3);
    std::string table = report_to_table(h, rep);
    CHECK(table.find("af") != std::string::npos);
    CHECK(table.find("fr") != std::string::npos);
}
