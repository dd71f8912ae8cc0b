#include "hexaf/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexaf {

HexSystem gen_truncated_parallelogram(std::span<const int> rows) {
    if (rows.empty()) throw ValidationError("need at least one row length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) throw ValidationError("row lengths must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw ValidationError("row lengths must be non-increasing");
    }
    // Row i sits at r = -i and keeps the same starting q, so each row begins
    // half a hexagon to the side of the one above; equal lengths give the
    // parallelogram, decreasing lengths cut a staircase off one corner.
    std::vector<Cell> cells;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < rows[i]; ++j) cells.push_back({j, -i});
    return HexSystem::build(std::move(cells));
}

HexSystem gen_linear_chain(int n) {
    if (n < 1) throw ValidationError("chain length must be positive");
    std::vector<int> rows = {n};
    return gen_truncated_parallelogram(rows);
}

Named named_from_string(const std::string& s) {
    if (s == "benzene") return Named::benzene;
    if (s == "naphthalene") return Named::naphthalene;
    if (s == "anthracene") return Named::anthracene;
    if (s == "triphenylene") return Named::triphenylene;
    if (s == "coronene") return Named::coronene;
    throw ValidationError("unknown system name: " + s);
}

HexSystem gen_named(Named which) {
    std::vector<Cell> cells;
    switch (which) {
        case Named::benzene:
            cells = {{0, 0}};
            break;
        case Named::naphthalene:
            cells = {{0, 0}, {1, 0}};
            break;
        case Named::anthracene:
            cells = {{0, 0}, {1, 0}, {2, 0}};
            break;
        case Named::triphenylene:
            // Central ring plus its three pairwise non-adjacent neighbors.
            cells = {{0, 0}, {1, 0}, {-1, 1}, {0, -1}};
            break;
        case Named::coronene:
            cells = {{0, 0}};
            for (Cell d : kNeighbors) cells.push_back(d);
            break;
    }
    return HexSystem::build(std::move(cells));
}

HexSystem gen_rn(int n) {
    if (n < 1) throw ValidationError("n must be at least 1");
    std::vector<Cell> cells = {{0, 0}, {1, 0}, {-1, 1}, {0, -1}};
    for (int i = 1; i <= n; ++i) {
        cells.push_back({i, i});
        cells.push_back({i + 1, i});
    }
    return HexSystem::build(std::move(cells));
}

Cell rn_central_cell() { return {0, 0}; }

bool is_truncated_parallelogram(const std::vector<Cell>& cells) {
    for (int t = 0; t < 12; ++t) {
        std::vector<Cell> img;
        img.reserve(cells.size());
        for (Cell c : cells) img.push_back(apply_symmetry(t, c));
        img = normalize_cells(std::move(img));

        std::map<int, std::vector<int>> rows;  // r -> sorted q values
        for (Cell c : img) rows[c.r].push_back(c.q);
        bool ok = true;
        int expect_r = static_cast<int>(rows.size()) - 1;  // top row after normalize
        int prev_start = 0, prev_len = 0;
        bool first = true;
        for (auto it = rows.rbegin(); it != rows.rend() && ok; ++it) {
            if (it->first != expect_r--) ok = false;
            const std::vector<int>& qs = it->second;
            int len = static_cast<int>(qs.size());
            if (qs.back() - qs.front() + 1 != len) ok = false;  // contiguous
            if (!first) {
                if (qs.front() != prev_start) ok = false;
                if (len > prev_len) ok = false;
            }
            prev_start = qs.front();
            prev_len = len;
            first = false;
        }
        if (ok) return true;
    }
    return false;
}

bool is_linear_chain(std::span<const Cell> cells) {
    if (cells.size() <= 1) return true;
    std::vector<Cell> cs(cells.begin(), cells.end());
    std::sort(cs.begin(), cs.end());
    for (Cell d : {Cell{1, 0}, Cell{0, 1}, Cell{1, -1}}) {
        bool ok = true;
        for (std::size_t i = 1; i < cs.size(); ++i) {
            Cell step = cs[i] - cs[i - 1];
            if (step != d) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

void for_each_system(int max_hexagons, const std::function<void(const HexSystem&, int, int)>& fn,
                     const CensusOptions& opt) {
    if (max_hexagons < 1) throw ValidationError("census size must be positive");
    if (max_hexagons > opt.budget)
        throw BudgetError("census of size " + std::to_string(max_hexagons) +
                          " exceeds budget " + std::to_string(opt.budget));

    // Grow connected cell sets one cell at a time, deduplicating by canonical
    // form. Sets with holes stay in the frontier (filling a hole is a legal
    // growth step) but are not emitted.
    std::set<std::vector<Cell>> frontier = {{{0, 0}}};
    for (int size = 1; size <= max_hexagons; ++size) {
        int idx = 0;
        for (const std::vector<Cell>& cs : frontier) {
            try {
                HexSystem h = HexSystem::build(cs);
                fn(h, size, idx++);
            } catch (const ValidationError&) {
                // holes only; connectivity and duplicates hold by construction
            }
        }
        if (size == max_hexagons) break;
        std::set<std::vector<Cell>> next;
        for (const std::vector<Cell>& cs : frontier)
            for (Cell c : cs)
                for (Cell d : kNeighbors) {
                    Cell cand = c + d;
                    if (std::binary_search(cs.begin(), cs.end(), cand)) continue;
                    std::vector<Cell> grown = cs;
                    grown.push_back(cand);
                    next.insert(canonical_cells(grown));
                }
        frontier = std::move(next);
    }
}

std::vector<HexSystem> census(int max_hexagons, const CensusOptions& opt) {
    std::vector<HexSystem> out;
    for_each_system(
        max_hexagons, [&](const HexSystem& h, int, int) { out.push_back(h); }, opt);
    return out;
}

}  // namespace hexaf
