#pragma once

#include <array>
#include <compare>
#include <vector>

namespace hexaf {

// Axial coordinates of a unit hexagon of the infinite lattice. Hexagons are
// pointy-topped and form horizontal rows: (q+1,r) is the east neighbor,
// (q,r+1) the north-east one.
struct Cell {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;

    Cell operator+(Cell o) const { return {q + o.q, r + o.r}; }
    Cell operator-(Cell o) const { return {q - o.q, r - o.r}; }
};

// Neighbor offsets in counterclockwise order: E, NE, NW, W, SW, SE.
inline constexpr std::array<Cell, 6> kNeighbors = {
    Cell{1, 0}, Cell{0, 1}, Cell{-1, 1}, Cell{-1, 0}, Cell{0, -1}, Cell{1, -1}};

inline bool cells_adjacent(Cell a, Cell b) {
    Cell d = b - a;
    for (Cell n : kNeighbors)
        if (d.q == n.q && d.r == n.r) return true;
    return false;
}

// Integer plane coordinates for lattice points, scaled so that every hexagon
// corner and every cell center is an integer point. A point (x,y) sits at
// (x*sqrt(3)/2, y/2) in the Euclidean plane; y grows upward.
struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Cell centers have y = 3r; corners have y = 3r +/- 1 or 3r +/- 2, so centers
// never collide with corners. Corners with y mod 3 == 2 have two lattice
// neighbors below and one above, corners with y mod 3 == 1 the opposite.
inline Point cell_center(Cell c) { return {2 * c.q + c.r, 3 * c.r}; }

// Corner offsets from the center, counterclockwise starting at the top:
// N, NW, SW, S, SE, NE. Ring edge i joins corner i and corner i+1 mod 6.
inline constexpr std::array<Point, 6> kCorners = {
    Point{0, 2}, Point{-1, 1}, Point{-1, -1}, Point{0, -2}, Point{1, -1}, Point{1, 1}};

inline Point cell_corner(Cell c, int i) {
    Point ctr = cell_center(c);
    return {ctr.x + kCorners[i].x, ctr.y + kCorners[i].y};
}

// Bipartition color. Every edge joins the two residue classes, and a vertex
// whose lattice neighbors all lie below it (a peak) is always in class 2,
// so peaks come out black under this rule.
inline bool point_black(Point p) { return ((p.y % 3) + 3) % 3 == 2; }

// 60-degree counterclockwise rotation about the origin cell.
inline Cell rot60(Cell c) { return {-c.r, c.q + c.r}; }
// Reflection across the horizontal axis through the origin cell.
inline Cell mirror_h(Cell c) { return {c.q + c.r, -c.r}; }

// The 12 lattice symmetries fixing the origin cell: t in [0,6) is rot60^t,
// t in [6,12) is rot60^(t-6) composed with the mirror.
inline Cell apply_symmetry(int t, Cell c) {
    if (t >= 6) {
        c = mirror_h(c);
        t -= 6;
    }
    for (int i = 0; i < t; ++i) c = rot60(c);
    return c;
}

// Translation-normalized sorted cell list: unique representative per
// translation class (min q and min r both shifted to zero).
std::vector<Cell> normalize_cells(std::vector<Cell> cells);

// Lexicographic minimum of normalize_cells over the 12 symmetries: unique
// representative per congruence class. Basis of isomorph-free enumeration.
std::vector<Cell> canonical_cells(const std::vector<Cell>& cells);

}  // namespace hexaf
