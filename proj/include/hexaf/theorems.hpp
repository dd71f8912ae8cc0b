#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexaf/hexsystem.hpp"
#include "hexaf/invariants.hpp"

namespace hexaf {

enum class Status { holds, fails, hypothesis_not_met, skipped_budget };
std::string to_string(Status s);

// One checked claim on one instance. A fails verdict always carries enough
// payload to reproduce: the cell set plus the offending matching/sets.
struct Verdict {
    std::string theorem;
    std::string instance;
    Status status = Status::holds;
    nlohmann::json payload;
};
nlohmann::json verdict_to_json(const Verdict& v);

struct VerifyOptions {
    AltCycleOptions cycles;
    std::size_t max_sets = 512;  // per-matching cap on maximum-set enumeration
};

// Per-matching invariant rows with both computation routes kept, so the
// verdict functions can compare them instead of trusting either one.
struct SystemSweep {
    std::vector<Matching> matchings;
    std::vector<MatchingRow> rows;
    int F = 0, Af = 0, Fr = 0;
};
SystemSweep compute_sweep(const HexSystem& h, const AltCycleOptions& opt = {});

// f = c and af = c' for every perfect matching; one verdict per matching.
std::vector<Verdict> verify_minimax(const HexSystem& h, const SystemSweep& s,
                                    const std::string& instance);

// F = Cl and Af = Fr, plus: every matching attaining f = F admits F pairwise
// disjoint alternating hexagons (packing search over hexagons only).
std::vector<Verdict> verify_clar_fries(const HexSystem& h, const SystemSweep& s,
                                       const std::string& instance);

// af = fr for every matching whose af reaches Af or Af - 1; matchings below
// those levels get hypothesis-not-met rows.
std::vector<Verdict> verify_main(const HexSystem& h, const SystemSweep& s,
                                 const std::string& instance);

// For matchings at levels Af and Af - 1: every maximum non-crossing
// compatible alternating set has pairwise disjoint interiors and each member
// bounds a linear chain. All maximum sets are enumerated up to max_sets; one
// verdict per set, skipped-budget when the cap cuts enumeration short.
std::vector<Verdict> verify_structure(const HexSystem& h, const SystemSweep& s,
                                      const std::string& instance,
                                      const VerifyOptions& opt = {});

// min over matchings of af equals 1 exactly for truncated parallelograms.
Verdict verify_af1(const HexSystem& h, const SystemSweep& s, const std::string& instance);

struct TriphenylenePlacement {
    int center = -1;
    std::array<int, 3> outer{-1, -1, -1};
};

// Some central cell plus three pairwise non-adjacent neighbors, all present,
// whose 18 ring vertices leave a perfectly matchable remainder.
bool has_nice_triphenylene(const HexSystem& h, TriphenylenePlacement* w = nullptr);

// No nice triphenylene <=> af = fr for every perfect matching.
Verdict verify_triphenylene(const HexSystem& h, const SystemSweep& s,
                            const std::string& instance);

// Some cell with all six neighbors present whose 24 ring vertices leave a
// perfectly matchable remainder.
bool has_nice_coronene(const HexSystem& h, Cell* center = nullptr);

// Experimental polarity (exercised by the test suite): the sextet pattern
// count equals the matching count exactly when no coronene is nice.
inline constexpr bool kSextetEqualityIffNoNiceCoronene = true;
Verdict verify_sextet_count(const HexSystem& h, const SystemSweep& s,
                            const std::string& instance);

// Staircase family facts: 2n+4 hexagons; some matching with fr = 2n+1 and
// af = 2n+2; Af = Fr = 2n+4; a nice triphenylene present.
Verdict validate_rn(const HexSystem& h, int n, const SystemSweep& s,
                    const std::string& instance);

}  // namespace hexaf
