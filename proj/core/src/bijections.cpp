#include "shifted/bijections.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "shifted/balanced.hpp"
#include "shifted/errors.hpp"

namespace shifted {

namespace {

// Reads (d, r) off a trapezoid shape: d parts, smallest part r+1.
std::pair<int, int> trapezoid_params(const StrictPartition& shape) {
    if (shape.empty()) throw UsageError("trapezoid: empty shape");
    int d = shape.d();
    int r = shape.part(d) - 1;
    if (r < 0 || shape != trapezoid(d, r))
        throw UsageError("trapezoid: the shape is not of the form Z(d,r)");
    return {d, r};
}

ShiftedTableau tableau_on(const StrictPartition& shape, int fill = 0) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.d(); ++i)
        rows.emplace_back(static_cast<std::size_t>(shape.part(i)), fill);
    return ShiftedTableau(shape, std::move(rows));
}

// One balanced-padding step at row i of the current tableau: swap the two
// columns at the growth frontier, then write the next value into the new box.
ShiftedTableau pad_bs_step(const ShiftedTableau& cur, int d, int i,
                           std::vector<ShiftedTableau>* steps) {
    const StrictPartition& shape = cur.shape();
    int j = shape.part(i) + i - d;  // column of the box being added
    std::vector<std::vector<int>> rows = cur.rows();
    std::vector<int> parts = shape.parts();
    for (int row = 1; row <= d; ++row) {
        if (!shape.contains(row, j) || !shape.contains(row, j + 1)) continue;
        std::size_t off = static_cast<std::size_t>(j - shape.row_min_col(row));
        std::swap(rows[static_cast<std::size_t>(row - 1)][off],
                  rows[static_cast<std::size_t>(row - 1)][off + 1]);
    }
    rows[static_cast<std::size_t>(i - 1)].push_back(cur.shape().size() + 1);
    parts[static_cast<std::size_t>(i - 1)] += 1;
    ShiftedTableau next(StrictPartition(parts), std::move(rows));
    if (steps) steps->push_back(next);
    return next;
}

// Inverse of pad_bs_step: the largest value must close row i; remove it and
// swap the frontier columns back.
ShiftedTableau unpad_bs_step(const ShiftedTableau& cur, int d, int i) {
    const StrictPartition& shape = cur.shape();
    int m = shape.size();
    Cell expected{i, shape.row_max_col(i)};
    if (cur.at(expected) != m)
        throw ValidationError(
            "balanced unpadding: the largest value is not at the expected frontier box of row " +
            std::to_string(i) + " (the input is not a padded balanced filling)");
    std::vector<std::vector<int>> rows = cur.rows();
    std::vector<int> parts = shape.parts();
    rows[static_cast<std::size_t>(i - 1)].pop_back();
    parts[static_cast<std::size_t>(i - 1)] -= 1;
    StrictPartition new_shape(parts);
    int j = new_shape.part(i) + i - d;  // frontier column before the step
    for (int row = 1; row <= d; ++row) {
        if (!new_shape.contains(row, j) || !new_shape.contains(row, j + 1)) continue;
        std::size_t off = static_cast<std::size_t>(j - new_shape.row_min_col(row));
        std::swap(rows[static_cast<std::size_t>(row - 1)][off],
                  rows[static_cast<std::size_t>(row - 1)][off + 1]);
    }
    return ShiftedTableau(std::move(new_shape), std::move(rows));
}

}  // namespace

Word bs_to_reduced_word(const ShiftedTableau& b) {
    auto [d, r] = trapezoid_params(b.shape());
    if (!is_balanced(b)) throw ValidationError("word extraction: the filling is not balanced");
    std::vector<Root> ordered(static_cast<std::size_t>(b.shape().size()),
                              Root::short_root(1));
    for (const Cell& c : cells(b.shape()))
        ordered[static_cast<std::size_t>(b.at(c) - 1)] = root_label(d, r, c);
    return reflection_order_to_word(ReflectionOrder{d + r, std::move(ordered)});
}

ShiftedTableau reduced_word_to_bs(const Word& word) {
    SignedPermutation w = word_to_perm(word);
    int n = word.rank;
    if (n < 1 || w.apply(n) >= 0)
        throw ValidationError("filling: the word does not multiply to a trapezoid window");
    int d = -w.apply(n);
    int r = n - d;
    if (r < 0 || w != w_dr(d, r))
        throw ValidationError("filling: the word does not multiply to a trapezoid window");
    ReflectionOrder order = reflection_order(word);  // also rejects non-reduced words
    std::map<Root, int> position;
    for (std::size_t k = 0; k < order.roots.size(); ++k)
        position[order.roots[k]] = static_cast<int>(k) + 1;
    StrictPartition shape = trapezoid(d, r);
    ShiftedTableau out = tableau_on(shape);
    for (const Cell& c : cells(shape)) out.set(c.row, c.col, position.at(root_label(d, r, c)));
    if (!is_balanced(out))
        throw ValidationError("filling: the produced tableau is not balanced");
    return out;
}

ShiftedTableau pad_syt(const ShiftedTableau& t, const TrapezoidContext& ctx) {
    if (t.shape() != ctx.lambda)
        throw UsageError("standard padding: tableau shape differs from the context shape");
    if (!t.is_bijective() || !is_standard(t))
        throw ValidationError("standard padding: the input is not standard");
    StrictPartition z = trapezoid(ctx.d, ctx.r);
    ShiftedTableau out = tableau_on(z);
    for (const Cell& c : cells(ctx.lambda)) out.set(c.row, c.col, t.at(c));
    int next = ctx.lambda_size();
    for (const Cell& c : cells(z))
        if (!ctx.lambda.contains(c)) out.set(c.row, c.col, ++next);
    if (!is_standard(out))
        throw ValidationError("standard padding: the padded tableau is not standard");
    return out;
}

ShiftedTableau unpad_syt(const ShiftedTableau& t_plus, const TrapezoidContext& ctx) {
    StrictPartition z = trapezoid(ctx.d, ctx.r);
    if (t_plus.shape() != z)
        throw UsageError("standard unpadding: tableau shape is not the ambient trapezoid");
    int n_small = ctx.lambda_size();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= ctx.d; ++i)
        rows.emplace_back(t_plus.rows()[static_cast<std::size_t>(i - 1)].begin(),
                          t_plus.rows()[static_cast<std::size_t>(i - 1)].begin() +
                              ctx.lambda.part(i));
    ShiftedTableau out(ctx.lambda, std::move(rows));
    // The removed entries must form exactly the canonical complement pattern.
    int next = n_small;
    for (const Cell& c : cells(z)) {
        if (ctx.lambda.contains(c)) {
            if (t_plus.at(c) > n_small)
                throw ValidationError(
                    "standard unpadding: a value above |lambda| sits inside the shape");
        } else if (t_plus.at(c) != ++next) {
            throw ValidationError(
                "standard unpadding: the complement is not filled in the canonical pattern");
        }
    }
    if (!out.is_bijective() || !is_standard(out))
        throw ValidationError("standard unpadding: the restriction is not standard");
    return out;
}

ShiftedTableau pad_bs(const ShiftedTableau& b, const TrapezoidContext& ctx,
                      std::vector<ShiftedTableau>* steps) {
    if (b.shape() != ctx.lambda)
        throw UsageError("balanced padding: tableau shape differs from the context shape");
    if (!is_balanced(b)) throw ValidationError("balanced padding: the input is not balanced");
    ShiftedTableau cur = b;
    for (int i = 1; i <= ctx.d; ++i)
        for (int k = 0; k < ctx.mu[static_cast<std::size_t>(i - 1)]; ++k)
            cur = pad_bs_step(cur, ctx.d, i, steps);
    if (!is_balanced(cur))
        throw ValidationError("balanced padding: the padded filling is not balanced");
    return cur;
}

ShiftedTableau unpad_bs(const ShiftedTableau& b_plus, const TrapezoidContext& ctx) {
    if (b_plus.shape() != trapezoid(ctx.d, ctx.r))
        throw UsageError("balanced unpadding: tableau shape is not the ambient trapezoid");
    if (!is_balanced(b_plus))
        throw ValidationError("balanced unpadding: the input is not balanced");
    ShiftedTableau cur = b_plus;
    for (int i = ctx.d; i >= 1; --i)
        for (int k = 0; k < ctx.mu[static_cast<std::size_t>(i - 1)]; ++k)
            cur = unpad_bs_step(cur, ctx.d, i);
    if (!is_balanced(cur))
        throw ValidationError("balanced unpadding: the restriction is not balanced");
    return cur;
}

ShiftedTableau syt_to_bs(const ShiftedTableau& t, const TrapezoidContext& ctx,
                         BijectionTrace* trace) {
    ShiftedTableau t_plus = pad_syt(t, ctx);
    // Unwind the full insertion of the trapezoid's common P tableau recorded
    // by T+; the popped letters, reversed, form the word.
    InsertionPair state{p_tableau_trapezoid(ctx.d, ctx.r), t_plus};
    Word word{ctx.n(), {}};
    while (!state.p.shape().empty()) {
        auto [smaller, letter] = reverse_insert(state);
        state = std::move(smaller);
        word.letters.push_back(letter);
    }
    std::reverse(word.letters.begin(), word.letters.end());
    // The recovered word must end with the complement word.
    Word tail = a_lambda(ctx);
    int n_small = ctx.lambda_size();
    if (std::vector<int>(word.letters.begin() + n_small, word.letters.end()) != tail.letters)
        throw ValidationError(
            "bijection (standard to balanced): the recovered word does not end with the "
            "complement word");
    ShiftedTableau b_plus = reduced_word_to_bs(word);
    if (trace) {
        trace->padded_input = t_plus;
        trace->word = word;
        trace->order = reflection_order(word);
        trace->padded_output = b_plus;
    }
    return unpad_bs(b_plus, ctx);
}

ShiftedTableau bs_to_syt(const ShiftedTableau& b, const TrapezoidContext& ctx,
                         BijectionTrace* trace) {
    ShiftedTableau b_plus = pad_bs(b, ctx, trace ? &trace->padding_steps : nullptr);
    Word word = bs_to_reduced_word(b_plus);
    Word tail = a_lambda(ctx);
    int n_small = ctx.lambda_size();
    if (std::vector<int>(word.letters.begin() + n_small, word.letters.end()) != tail.letters)
        throw ValidationError(
            "bijection (balanced to standard): the extracted word does not end with the "
            "complement word");
    InsertionPair pq = kraskiewicz_insert(word);
    if (pq.p != p_tableau_trapezoid(ctx.d, ctx.r))
        throw ValidationError(
            "bijection (balanced to standard): the insertion tableau is not the trapezoid's "
            "common P tableau");
    if (trace) {
        trace->padded_input = b_plus;
        trace->word = word;
        trace->order = reflection_order(word);
        trace->insertion_p = pq.p;
        trace->padded_output = pq.q;
    }
    return unpad_syt(pq.q, ctx);
}

}  // namespace shifted
