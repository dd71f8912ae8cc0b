#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hexaf::solve {

// Exact minimum hitting set over integer candidates. Each input set must be
// nonempty and sorted. Returns the optimum size; the lex variant returns the
// lexicographically smallest optimal set.
int min_hitting_set_size(const std::vector<std::vector<int>>& sets);
std::vector<int> min_hitting_set_lex(const std::vector<std::vector<int>>& sets);

// Dense undirected graph over vertices 0..n-1 backed by bitset rows.
class BitGraph {
  public:
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), rows_(n_, std::vector<std::uint64_t>(words_, 0)) {}

    int size() const { return n_; }
    void add_edge(int u, int v) {
        rows_[u][v >> 6] |= std::uint64_t(1) << (v & 63);
        rows_[v][u >> 6] |= std::uint64_t(1) << (u & 63);
    }
    bool has_edge(int u, int v) const {
        return (rows_[u][v >> 6] >> (v & 63)) & 1;
    }
    const std::vector<std::uint64_t>& row(int v) const { return rows_[v]; }
    int words() const { return words_; }

  private:
    int n_;
    int words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Exact maximum clique (branch and bound with greedy coloring bound).
int max_clique_size(const BitGraph& g);
std::vector<int> max_clique_lex(const BitGraph& g);  // lex smallest maximum clique

// All cliques of the given size, in lexicographic order, up to cap many.
// Returns false when the cap cut the enumeration short.
bool enumerate_cliques_of_size(const BitGraph& g, int target, std::size_t cap,
                               std::vector<std::vector<int>>& out);

// Maximum independent set via clique on the complement.
int max_independent_set_size(const BitGraph& g);
std::vector<int> max_independent_set_lex(const BitGraph& g);

}  // namespace hexaf::solve
