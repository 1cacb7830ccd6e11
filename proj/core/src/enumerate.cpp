#include "shifted/enumerate.hpp"

#include <string>

#include "shifted/errors.hpp"
#include "shifted/hooks.hpp"

namespace shifted {

namespace {

struct SytSearch {
    const StrictPartition& lambda;
    const std::function<bool(const ShiftedTableau&)>& visit;
    std::vector<std::vector<int>> rows;
    std::vector<int> filled;  // boxes filled so far in each row (prefixes)
    int placed = 0;

    bool addable(int i) const {
        if (filled[static_cast<std::size_t>(i - 1)] >= lambda.part(i)) return false;
        if (i == 1) return true;
        // The box above the candidate must already be filled.
        return filled[static_cast<std::size_t>(i - 2)] >= filled[static_cast<std::size_t>(i - 1)] + 2;
    }

    bool run() {
        if (placed == lambda.size())
            return visit(ShiftedTableau(lambda, rows));
        for (int i = 1; i <= lambda.d(); ++i) {
            if (!addable(i)) continue;
            int& len = filled[static_cast<std::size_t>(i - 1)];
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(len)] = placed + 1;
            ++len;
            ++placed;
            bool keep_going = run();
            --placed;
            --len;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_syt(const StrictPartition& lambda,
                  const std::function<bool(const ShiftedTableau&)>& visit) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= lambda.d(); ++i)
        rows.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
    SytSearch search{lambda, visit, std::move(rows),
                     std::vector<int>(static_cast<std::size_t>(lambda.d()), 0)};
    search.run();
}

std::vector<ShiftedTableau> enumerate_syt(const StrictPartition& lambda) {
    std::vector<ShiftedTableau> out;
    for_each_syt(lambda, [&](const ShiftedTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

namespace {

struct BsSearch {
    const StrictPartition& lambda;
    const std::function<bool(const ShiftedTableau&)>& visit;
    std::vector<Cell> boxes;                      // row-major
    std::vector<std::vector<int>> sources;        // per box: extended-hook source box indices
    std::vector<int> ranks;                       // per box
    std::vector<int> values;                      // 0 = empty
    int next_value = 0;

    bool run() {
        if (next_value == 0) {
            std::vector<std::vector<int>> rows;
            std::size_t k = 0;
            for (int i = 1; i <= lambda.d(); ++i) {
                rows.emplace_back();
                for (int j = 0; j < lambda.part(i); ++j) rows.back().push_back(values[k++]);
            }
            return visit(ShiftedTableau(lambda, rows));
        }
        for (std::size_t c = 0; c < boxes.size(); ++c) {
            if (values[c] != 0) continue;
            // All previously placed values are strictly larger than
            // next_value, so the box's strictly-greater count is already
            // final: it must equal rank - 1 right now.
            int placed_in_hook = 0;
            for (int s : sources[c])
                if (values[static_cast<std::size_t>(s)] != 0) ++placed_in_hook;
            if (placed_in_hook != ranks[c] - 1) continue;
            values[c] = next_value;
            --next_value;
            bool keep_going = run();
            ++next_value;
            values[c] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_bs_bruteforce(const StrictPartition& lambda,
                            const std::function<bool(const ShiftedTableau&)>& visit,
                            int cap) {
    if (lambda.size() > cap)
        throw UsageError("balanced brute force: size " + std::to_string(lambda.size()) +
                         " exceeds cap " + std::to_string(cap) +
                         " (raise with --max or SHIFTED_BALANCED_MAX)");
    BsSearch search{lambda, visit, cells(lambda), {}, {}, {}, lambda.size()};
    auto flat_index = [&](const Cell& c) {
        int idx = 0;
        for (int i = 1; i < c.row; ++i) idx += lambda.part(i);
        return idx + (c.col - lambda.row_min_col(c.row));
    };
    for (const Cell& c : search.boxes) {
        search.ranks.push_back(rank(lambda, c));
        std::vector<int> src;
        for (const Cell& x : extended_hook(lambda, c)) {
            Cell source = (x.col >= lambda.row_min_col(x.row)) ? x : Cell{x.row, 0};
            src.push_back(flat_index(source));
        }
        search.sources.push_back(std::move(src));
    }
    search.values.assign(search.boxes.size(), 0);
    search.run();
}

std::vector<ShiftedTableau> enumerate_bs_bruteforce(const StrictPartition& lambda, int cap) {
    std::vector<ShiftedTableau> out;
    for_each_bs_bruteforce(lambda, [&](const ShiftedTableau& t) {
        out.push_back(t);
        return true;
    }, cap);
    return out;
}

}  // namespace shifted
