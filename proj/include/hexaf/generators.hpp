#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hexaf/hexsystem.hpp"

namespace hexaf {

// Horizontal rows of given lengths; row lengths must be positive and
// non-increasing, and each row starts one position below-right of the
// previous row's first hexagon. A single row is a linear chain.
HexSystem gen_truncated_parallelogram(std::span<const int> rows);
HexSystem gen_linear_chain(int n);

enum class Named { benzene, naphthalene, anthracene, triphenylene, coronene };
Named named_from_string(const std::string& s);  // throws ValidationError
HexSystem gen_named(Named which);

// Triphenylene grown by a staircase arm of 2n extra hexagons attached to one
// of its outer rings; 2n+4 hexagons total. The central ring stays the only
// cell with three pairwise non-adjacent neighbors.
HexSystem gen_rn(int n);
Cell rn_central_cell();

// Does the cell set match gen_truncated_parallelogram output up to the 12
// lattice symmetries?
bool is_truncated_parallelogram(const std::vector<Cell>& cells);

// Cells lie consecutively along one lattice axis (single cells count).
bool is_linear_chain(std::span<const Cell> cells);

struct CensusOptions {
    int budget = 8;  // hard cap on hexagon count
};

// All hexagonal systems with up to max_hexagons cells, one representative
// per congruence class, ordered by size then canonical form. The callback
// receives the system, its cell count and its index within that cell count.
void for_each_system(int max_hexagons, const std::function<void(const HexSystem&, int, int)>& fn,
                     const CensusOptions& opt = {});
std::vector<HexSystem> census(int max_hexagons, const CensusOptions& opt = {});

}  // namespace hexaf
