#pragma once

#include <span>
#include <vector>

#include "hexaf/hexsystem.hpp"

namespace hexaf {

// A perfect matching, stored as a sorted vector of edge ids.
struct Matching {
    std::vector<int> edges;

    bool contains(int e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

std::vector<char> edge_mask(const HexSystem& h, const Matching& m);
bool is_perfect_matching(const HexSystem& h, const Matching& m);

// All perfect matchings in lexicographic order of their sorted edge lists.
// Branches on the lowest uncovered vertex and propagates forced edges.
std::vector<Matching> enumerate_matchings(const HexSystem& h);

// Existence test (Kuhn augmenting paths), no enumeration.
bool has_perfect_matching(const HexSystem& h);

// Perfect matchings of h minus the given edges, counted only up to cap; the
// search stops as soon as cap is reached, so large systems stay cheap.
int count_matchings_up_to(const HexSystem& h, std::span<const int> deleted_edges, int cap);

// Does deleting the given vertices leave a perfectly matchable graph?
bool is_nice(const HexSystem& h, std::span<const int> vertex_ids);

// Is m the unique perfect matching of h minus the given edges? Requires m to
// be perfect on that subgraph (in particular disjoint from deleted_edges);
// decided by the absence of any m-alternating cycle there.
bool has_unique_pm(const HexSystem& h, std::span<const int> deleted_edges, const Matching& m);

// Symmetric difference with an alternating cycle, given as the cyclic edge
// sequence of the cycle. Validates the alternation and the result.
Matching rotate(const HexSystem& h, const Matching& m, std::span<const int> cycle_eseq);

}  // namespace hexaf
