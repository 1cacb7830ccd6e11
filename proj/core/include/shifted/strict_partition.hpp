#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace shifted {

// A box of a shifted diagram. Rows are 1-based; columns carry signed indices,
// column 0 being the staircase anti-diagonal: row i of a d-row shape spans
// columns i-d .. lambda_i+i-d-1, so every nonempty row contains column 0.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Strictly decreasing sequence of positive parts; indexes a shifted shape.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);  // validates

    int d() const { return static_cast<int>(parts_.size()); }
    int size() const;  // N = number of boxes
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int row_min_col(int i) const { return i - d(); }
    int row_max_col(int i) const { return part(i) + i - d() - 1; }
    bool contains(int row, int col) const;
    bool contains(const Cell& c) const { return contains(c.row, c.col); }

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

// D(lambda) in row-major order (row 1 first, columns increasing); length N.
std::vector<Cell> cells(const StrictPartition& lambda);

// D(lambda) plus the d margin boxes (i, -(d+1-i)), one per row, each sitting
// immediately left of its row; length N + d. Row-major order as well.
std::vector<Cell> extended_cells(const StrictPartition& lambda);

// The margin box of row i, namely (i, i-d-1).
Cell extended_cell_of_row(const StrictPartition& lambda, int i);

}  // namespace shifted
