#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hexaf/hexsystem.hpp"
#include "hexaf/matching.hpp"

namespace hexaf {

// An M-alternating cycle. vseq is the traversal along which matched edges
// run black->white; proper means matched edges run white->black along the
// clockwise traversal, which is equivalent to vseq being counterclockwise.
struct AltCycle {
    std::vector<int> vseq;      // cyclic vertex sequence, starts at min vertex
    std::vector<int> eseq;      // eseq[i] joins vseq[i] and vseq[(i+1) % len]
    std::vector<int> vset;      // sorted vertices
    std::vector<int> eset;      // sorted edges
    std::vector<int> interior;  // sorted ids of cells strictly inside
    bool proper = false;

    int len() const { return static_cast<int>(vseq.size()); }
    int h() const { return static_cast<int>(interior.size()); }
    friend auto operator<=>(const AltCycle&, const AltCycle&) = default;
};

struct AltCycleOptions {
    std::size_t max_cycles = 200000;  // throws BudgetError beyond this
};

// Every M-alternating cycle, exactly once, as the directed simple cycles of
// the orientation digraph (matched edges black->white, others white->black).
// Deterministic order: by length, then by vertex sequence.
std::vector<AltCycle> enumerate_alt_cycles(const HexSystem& h, const Matching& m,
                                           const AltCycleOptions& opt = {});

bool is_alternating_hexagon(const HexSystem& h, const Matching& m, int cid);
std::vector<int> alternating_hexagons(const HexSystem& h, const Matching& m);  // cell ids
// Requires the hexagon to be alternating.
bool hexagon_proper(const HexSystem& h, const Matching& m, int cid);
AltCycle make_hexagon_cycle(const HexSystem& h, const Matching& m, int cid);

// Two alternating cycles are compatible when they share no vertex at all, or
// when every shared edge is matched and every shared vertex is an endpoint
// of a shared matched edge.
bool compatible(const HexSystem& h, const std::vector<char>& m_mask, const AltCycle& a,
                const AltCycle& b);
bool compatible(const HexSystem& h, const Matching& m, const AltCycle& a, const AltCycle& b);

// Interiors are disjoint or nested.
bool non_crossing(const AltCycle& a, const AltCycle& b);

bool is_linear_chain_cells(const HexSystem& h, std::span<const int> cell_ids);
// The cells strictly inside the cycle form a linear chain.
bool is_linear_chain_interior(const HexSystem& h, const AltCycle& c);

// Clockwise vertex sequence starting at the minimal vertex id (serialization
// order).
std::vector<int> clockwise_vseq(const AltCycle& c);

Matching rotate(const HexSystem& h, const Matching& m, const AltCycle& c);

}  // namespace hexaf
