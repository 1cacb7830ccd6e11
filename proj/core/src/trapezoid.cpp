#include "shifted/trapezoid.hpp"

#include <algorithm>
#include <string>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

void require_dr(int d, int r) {
    if (d < 1 || r < 0) throw UsageError("trapezoid: need d >= 1 and r >= 0");
}

}  // namespace

StrictPartition trapezoid(int d, int r) {
    require_dr(d, r);
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(r + 2 * (d - i) + 1);
    return StrictPartition(parts);
}

std::pair<int, int> min_trapezoid(const StrictPartition& lambda) {
    if (lambda.empty()) throw UsageError("trapezoid: empty shape has no ambient trapezoid");
    int d = lambda.d();
    int r = 0;
    for (int i = 1; i <= d; ++i) r = std::max(r, lambda.part(i) - 2 * (d - i) - 1);
    return {d, r};
}

SignedPermutation w_dr(int d, int r) {
    require_dr(d, r);
    std::vector<int> window;
    for (int i = 1; i <= d + r; ++i) window.push_back(i <= r ? d + i : -(i - r));
    return SignedPermutation(std::move(window));
}

Root root_label(int d, int r, const Cell& c) {
    if (!trapezoid(d, r).contains(c))
        throw UsageError("trapezoid: cell is outside the shape");
    int i = c.row, j = c.col;
    int m = d + 1 - i;
    if (j == 0) return Root::short_root(m);
    if (j < 0) return Root::sum(m, -j);       // e_m - e_j = e_m + e_{-j}, and m > -j here
    if (j <= r) return Root::sum(j + d, m);   // j + d > d >= m
    return Root::diff(m, j - r);              // j - r <= d - i < m
}

Root extended_root_label(int d, int r, const Cell& c) {
    if (c.col == c.row - d - 1 && c.row >= 1 && c.row <= d)
        return Root::doubled(d + 1 - c.row);
    return root_label(d, r, c);
}

ShiftedTableau p_tableau_trapezoid(int d, int r) {
    StrictPartition shape = trapezoid(d, r);
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= d; ++i) {
        std::vector<int> row;
        for (int j = shape.row_min_col(i); j <= shape.row_max_col(i); ++j)
            row.push_back(j >= 0 ? j : r - j);
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(std::move(shape), std::move(rows));
}

TrapezoidContext make_context(const StrictPartition& lambda) {
    auto [d, r] = min_trapezoid(lambda);
    return make_context(lambda, d, r);
}

TrapezoidContext make_context(const StrictPartition& lambda, int d, int r) {
    require_dr(d, r);
    if (lambda.d() != d)
        throw UsageError("trapezoid: the shape must have exactly d = " + std::to_string(d) +
                         " parts");
    StrictPartition z = trapezoid(d, r);
    for (int i = 1; i <= d; ++i)
        if (lambda.part(i) > z.part(i))
            throw UsageError("trapezoid: the shape does not fit inside Z(" + std::to_string(d) +
                             "," + std::to_string(r) + ")");
    TrapezoidContext ctx;
    ctx.d = d;
    ctx.r = r;
    ctx.lambda = lambda;
    ctx.mu.resize(static_cast<std::size_t>(d));
    ctx.sigma.assign(static_cast<std::size_t>(d) + 1, 0);
    ctx.nu.resize(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        ctx.mu[static_cast<std::size_t>(i - 1)] = z.part(i) - lambda.part(i);
        ctx.sigma[static_cast<std::size_t>(i)] =
            ctx.sigma[static_cast<std::size_t>(i - 1)] + ctx.mu[static_cast<std::size_t>(i - 1)];
    }
    int running = ctx.mu[static_cast<std::size_t>(d - 1)];
    for (int i = d; i >= 1; --i) {
        running = std::min(running, ctx.mu[static_cast<std::size_t>(i - 1)]);
        ctx.nu[static_cast<std::size_t>(i - 1)] = running;
    }
    return ctx;
}

Word a_lambda(const TrapezoidContext& ctx) {
    Word out{ctx.n(), {}};
    for (int i = 1; i <= ctx.d; ++i) {
        int mu = ctx.mu[static_cast<std::size_t>(i - 1)];
        for (int a = ctx.d + ctx.r - i - mu + 1; a <= ctx.d + ctx.r - i; ++a)
            out.letters.push_back(a);
    }
    return out;
}

SignedPermutation w_lambda(const TrapezoidContext& ctx) {
    SignedPermutation w = w_dr(ctx.d, ctx.r);
    Word al = a_lambda(ctx);
    for (auto it = al.letters.rbegin(); it != al.letters.rend(); ++it)
        w = w.mul_simple_right(*it);
    if (length(w) != ctx.lambda_size())
        throw ValidationError("trapezoid: the shortened window does not have length |lambda|");
    return w;
}

ShiftedTableau p_lambda(const TrapezoidContext& ctx) {
    const StrictPartition& lambda = ctx.lambda;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= ctx.d; ++i) {
        std::vector<int> row;
        for (int j = lambda.row_min_col(i); j <= lambda.row_max_col(i); ++j)
            row.push_back(j >= 0 ? j
                                 : ctx.r - j - ctx.nu[static_cast<std::size_t>(ctx.d + j)]);
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(lambda, std::move(rows));
}

SignedPermutation w_lambda_via_path(const TrapezoidContext& ctx) {
    int d = ctx.d, r = ctx.r, n = ctx.n();
    // Cumulative downstep counts demanded before each upstep.
    std::vector<char> path;
    int emitted = 0;
    for (int t = 1; t <= n; ++t) {
        int need = 0;
        if (t > r) {
            int i = t - r;
            need = ctx.lambda.part(1) + 1 - d - 1;
            for (int ip = 2; ip <= d + 1 - i; ++ip)
                need = std::min(need, ctx.lambda.part(ip) + ip - d - 1);
        }
        for (; emitted < need; ++emitted) path.push_back('D');
        path.push_back('U');
    }
    for (; emitted < n; ++emitted) path.push_back('D');

    // Label upsteps n, n-1, ..., d+1, -1, ..., -d and transport to downsteps.
    std::vector<int> labels;
    for (int v = n; v > d; --v) labels.push_back(v);
    for (int i = 1; i <= d; ++i) labels.push_back(-i);
    std::vector<int> stack;
    std::vector<int> window;
    std::size_t u = 0;
    for (char s : path) {
        if (s == 'U') {
            stack.push_back(labels[u++]);
        } else {
            window.push_back(stack.back());
            stack.pop_back();
        }
    }
    return SignedPermutation(std::move(window));
}

}  // namespace shifted
