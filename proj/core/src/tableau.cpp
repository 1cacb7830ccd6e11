#include "shifted/tableau.hpp"

#include <algorithm>

#include "shifted/errors.hpp"

namespace shifted {

ShiftedTableau::ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.d())
        throw UsageError("tableau: row count does not match shape");
    for (int i = 1; i <= shape_.d(); ++i)
        if (static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size()) != shape_.part(i))
            throw UsageError("tableau: row length does not match shape");
}

int ShiftedTableau::at(int row, int col) const {
    if (!shape_.contains(row, col))
        throw UsageError("tableau: cell outside shape");
    return rows_[static_cast<std::size_t>(row - 1)]
                [static_cast<std::size_t>(col - shape_.row_min_col(row))];
}

void ShiftedTableau::set(int row, int col, int value) {
    if (!shape_.contains(row, col))
        throw UsageError("tableau: cell outside shape");
    rows_[static_cast<std::size_t>(row - 1)]
         [static_cast<std::size_t>(col - shape_.row_min_col(row))] = value;
}

bool ShiftedTableau::is_bijective() const {
    std::vector<int> vals;
    for (const auto& r : rows_) vals.insert(vals.end(), r.begin(), r.end());
    std::sort(vals.begin(), vals.end());
    for (std::size_t k = 0; k < vals.size(); ++k)
        if (vals[k] != static_cast<int>(k) + 1) return false;
    return true;
}

bool is_standard(const ShiftedTableau& t) {
    const StrictPartition& sh = t.shape();
    if (!t.is_bijective()) return false;
    for (int i = 1; i <= sh.d(); ++i) {
        for (int j = sh.row_min_col(i); j <= sh.row_max_col(i); ++j) {
            if (j + 1 <= sh.row_max_col(i) && t.at(i, j) >= t.at(i, j + 1)) return false;
            if (sh.contains(i + 1, j) && t.at(i, j) >= t.at(i + 1, j)) return false;
        }
    }
    return true;
}

std::map<Cell, int> extended_filling(const ShiftedTableau& t) {
    std::map<Cell, int> out;
    const StrictPartition& sh = t.shape();
    for (const Cell& c : cells(sh)) out[c] = t.at(c);
    for (int i = 1; i <= sh.d(); ++i)
        out[extended_cell_of_row(sh, i)] = t.at(i, 0);
    return out;
}

}  // namespace shifted
