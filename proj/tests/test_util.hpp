#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "shifted/signed_permutation.hpp"
#include "shifted/strict_partition.hpp"
#include "shifted/tableau.hpp"

namespace shifted::testutil {

inline void partitions_rec(std::vector<int>& parts, int remaining, int max_part,
                           std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(parts, remaining - p, p - 1, out);
        parts.pop_back();
    }
}

// All strict partitions of exactly n, largest part first.
inline std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> parts;
    partitions_rec(parts, n, n, out);
    return out;
}

// All strict partitions with 1 <= |lambda| <= max_size.
inline std::vector<StrictPartition> strict_partitions_up_to(int max_size) {
    std::vector<StrictPartition> out;
    for (int n = 1; n <= max_size; ++n)
        for (auto& lambda : strict_partitions_of(n)) out.push_back(std::move(lambda));
    return out;
}

// The whole group W(B_n) as windows, 2^n n! elements.
inline std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> window = values;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) window[static_cast<std::size_t>(i)] *= -1;
            out.emplace_back(std::move(window));
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

inline ShiftedTableau tab(std::vector<int> parts, std::vector<std::vector<int>> rows) {
    return ShiftedTableau(StrictPartition(std::move(parts)), std::move(rows));
}

// Splits 1..N values (in the given order) into rows of the given shape.
inline ShiftedTableau fill_rows(const StrictPartition& lambda, const std::vector<int>& values) {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int i = 1; i <= lambda.d(); ++i) {
        std::size_t len = static_cast<std::size_t>(lambda.part(i));
        rows.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(k),
                          values.begin() + static_cast<std::ptrdiff_t>(k + len));
        k += len;
    }
    return ShiftedTableau(lambda, std::move(rows));
}

}  // namespace shifted::testutil
