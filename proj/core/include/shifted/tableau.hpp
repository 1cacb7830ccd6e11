#pragma once

#include <map>
#include <vector>

#include "shifted/strict_partition.hpp"

namespace shifted {

// A filling of a shifted diagram with integers. Rows are stored densely,
// rows_[i-1][k] holding the value at (i, row_min_col(i) + k).
//
// Two families share this type: bijective tableaux (values exactly 1..N, used
// for standard and balanced tableaux) and letter tableaux (small repeatable
// letters, used for insertion tableaux).
class ShiftedTableau {
public:
    ShiftedTableau() = default;
    ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows);  // validates sizes

    const StrictPartition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int at(int row, int col) const;
    int at(const Cell& c) const { return at(c.row, c.col); }
    void set(int row, int col, int value);

    bool is_bijective() const;  // values are exactly {1..N}

    friend auto operator<=>(const ShiftedTableau&, const ShiftedTableau&) = default;

private:
    StrictPartition shape_;
    std::vector<std::vector<int>> rows_;
};

// Entries strictly increase along rows and down columns (values need not be
// checked for bijectivity here; standardness of an SYT additionally requires
// is_bijective).
bool is_standard(const ShiftedTableau& t);

// The filling extended to the margin boxes: on D(lambda) it agrees with t, and
// the margin box of row i repeats the row's column-0 value t(i, 0).
std::map<Cell, int> extended_filling(const ShiftedTableau& t);

}  // namespace shifted
