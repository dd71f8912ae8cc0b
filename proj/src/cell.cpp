#include "hexaf/cell.hpp"

#include <algorithm>
#include <limits>

namespace hexaf {

std::vector<Cell> normalize_cells(std::vector<Cell> cells) {
    int minq = std::numeric_limits<int>::max();
    int minr = std::numeric_limits<int>::max();
    for (Cell c : cells) {
        minq = std::min(minq, c.q);
        minr = std::min(minr, c.r);
    }
    for (Cell& c : cells) {
        c.q -= minq;
        c.r -= minr;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Cell> canonical_cells(const std::vector<Cell>& cells) {
    std::vector<Cell> best;
    for (int t = 0; t < 12; ++t) {
        std::vector<Cell> img;
        img.reserve(cells.size());
        for (Cell c : cells) img.push_back(apply_symmetry(t, c));
        img = normalize_cells(std::move(img));
        if (t == 0 || img < best) best = std::move(img);
    }
    return best;
}

}  // namespace hexaf
