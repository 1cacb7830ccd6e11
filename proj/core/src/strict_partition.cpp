#include "shifted/strict_partition.hpp"

#include <numeric>

#include "shifted/errors.hpp"

namespace shifted {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw UsageError("strict partition: parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] <= parts_[k + 1])
            throw UsageError("strict partition: parts must strictly decrease");
    }
}

int StrictPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::contains(int row, int col) const {
    if (row < 1 || row > d()) return false;
    return col >= row_min_col(row) && col <= row_max_col(row);
}

std::vector<Cell> cells(const StrictPartition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.d(); ++i)
        for (int j = lambda.row_min_col(i); j <= lambda.row_max_col(i); ++j)
            out.push_back({i, j});
    return out;
}

Cell extended_cell_of_row(const StrictPartition& lambda, int i) {
    return {i, i - lambda.d() - 1};
}

std::vector<Cell> extended_cells(const StrictPartition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.size() + lambda.d()));
    for (int i = 1; i <= lambda.d(); ++i) {
        out.push_back(extended_cell_of_row(lambda, i));
        for (int j = lambda.row_min_col(i); j <= lambda.row_max_col(i); ++j)
            out.push_back({i, j});
    }
    return out;
}

}  // namespace shifted
