#include "shifted/hooks.hpp"

#include <algorithm>

#include "shifted/errors.hpp"

namespace shifted {

namespace {
void require_cell(const StrictPartition& lambda, const Cell& c) {
    if (!lambda.contains(c))
        throw UsageError("hook/rank: cell outside shape");
}
}  // namespace

std::vector<Cell> hook(const StrictPartition& lambda, const Cell& c) {
    require_cell(lambda, c);
    std::vector<Cell> out;
    out.push_back(c);
    for (int j = c.col + 1; j <= lambda.row_max_col(c.row); ++j) out.push_back({c.row, j});
    for (int i = c.row + 1; i <= lambda.d(); ++i)
        if (lambda.contains(i, c.col)) out.push_back({i, c.col});
    if (c.col < 0) {
        int mirror = lambda.d() + c.col + 1;  // row d-j'+1 for column -j'
        for (int j = lambda.row_min_col(mirror); j <= lambda.row_max_col(mirror); ++j)
            out.push_back({mirror, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

int hook_length(const StrictPartition& lambda, const Cell& c) {
    return static_cast<int>(hook(lambda, c).size());
}

std::vector<Cell> extended_hook(const StrictPartition& lambda, const Cell& c) {
    std::vector<Cell> out = hook(lambda, c);
    if (c.col < 0) {
        int mirror = lambda.d() + c.col + 1;
        out.push_back(extended_cell_of_row(lambda, mirror));  // = (mirror, c.col)
        std::sort(out.begin(), out.end());
    }
    return out;
}

int extended_hook_length(const StrictPartition& lambda, const Cell& c) {
    return static_cast<int>(extended_hook(lambda, c).size());
}

int rank(const StrictPartition& lambda, const Cell& c) {
    require_cell(lambda, c);
    int d = lambda.d();
    int i = c.row, j = c.col;
    if (j >= 0) return lambda.part(i) - d + i - j;
    return lambda.part(i) - d + i + lambda.part(d + 1 + j) + j + 1;
}

int rank_by_count(const StrictPartition& lambda, const Cell& c) {
    require_cell(lambda, c);
    std::vector<Cell> h = hook(lambda, c);
    if (c.col >= 0) {
        int row_boxes = 0;
        for (const Cell& x : h)
            if (x.row == c.row) ++row_boxes;
        return row_boxes;
    }
    int positive_boxes = 0;
    for (const Cell& x : h)
        if (x.col > 0) ++positive_boxes;
    return 2 + positive_boxes;
}

mpz_class hook_length_formula_count(const StrictPartition& lambda) {
    mpz_class factorial = 1;
    for (int k = 2; k <= lambda.size(); ++k) factorial *= k;
    mpz_class denom = 1;
    for (const Cell& c : cells(lambda)) denom *= hook_length(lambda, c);
    if (!mpz_divisible_p(factorial.get_mpz_t(), denom.get_mpz_t()))
        throw ValidationError("hook length formula: division not exact (internal invariant)");
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), factorial.get_mpz_t(), denom.get_mpz_t());
    return result;
}

}  // namespace shifted
