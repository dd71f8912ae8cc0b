#pragma once

#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "hexaf/altcycle.hpp"
#include "hexaf/hexsystem.hpp"
#include "hexaf/matching.hpp"

namespace hexaf {

using BigInt = boost::multiprecision::cpp_int;

// Smallest set of matched edges meeting every alternating cycle. cert, when
// requested, receives the lexicographically smallest optimal edge set.
int forcing_number(const HexSystem& h, const Matching& m, const std::vector<AltCycle>& cycles,
                   std::vector<int>* cert = nullptr);

// Smallest set of unmatched edges meeting every alternating cycle; deleting
// the certificate leaves m as the unique perfect matching (validated).
int anti_forcing_number(const HexSystem& h, const Matching& m,
                        const std::vector<AltCycle>& cycles, std::vector<int>* cert = nullptr);

// Maximum number of pairwise vertex-disjoint alternating cycles; witness is
// the lex smallest optimal list of indices into cycles.
int max_disjoint_cycles(const std::vector<AltCycle>& cycles, std::vector<int>* witness = nullptr);

// Maximum pairwise compatible family of alternating cycles.
int max_compatible_set(const HexSystem& h, const Matching& m, const std::vector<AltCycle>& cycles,
                       std::vector<int>* witness = nullptr);

// One row of per-matching invariants. Construction cross-checks the two
// routes to each quantity: f must equal the disjoint-cycle maximum c, af
// must equal the compatible-set maximum c', and af is at least fr.
struct MatchingRow {
    int f = 0, c = 0, af = 0, cp = 0, fr = 0;
    std::vector<int> f_cert, af_cert;  // edge ids
};
MatchingRow matching_row(const HexSystem& h, const Matching& m, const AltCycleOptions& opt = {},
                         bool with_certs = false);

// Largest set of pairwise disjoint hexagons whose removal leaves a
// perfectly matchable graph; witness gets the lex smallest optimal cell set.
int clar_number(const HexSystem& h, std::vector<int>* witness_cells = nullptr);

// Number of such hexagon sets of any size, the empty set included.
BigInt sextet_count(const HexSystem& h);

// Maximum number of alternating hexagons over the given matchings; arg gets
// the first attaining index.
int fries_number(const HexSystem& h, const std::vector<Matching>& ms, int* arg = nullptr);

// Is some single edge deletion enough to pin down a unique perfect matching?
bool has_anti_forcing_edge(const HexSystem& h);

struct ReportOptions {
    AltCycleOptions cycles;
    bool with_certs = true;
};

struct InvariantReport {
    std::vector<Cell> cells;
    int n = 0, m = 0, hexagons = 0;
    BigInt k = 0;  // number of perfect matchings
    BigInt r = 0;  // number of resonant hexagon sets
    int F = 0, Af = 0, Cl = 0, Fr = 0;  // only meaningful when k > 0
    std::set<int> f_spectrum, af_spectrum;
    std::vector<Matching> matchings;
    std::vector<MatchingRow> rows;
};

InvariantReport compute_report(const HexSystem& h, const ReportOptions& opt = {});

nlohmann::json report_to_json(const HexSystem& h, const InvariantReport& rep);
std::string report_to_table(const HexSystem& h, const InvariantReport& rep);

}  // namespace hexaf
