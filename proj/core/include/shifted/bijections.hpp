#pragma once

#include <vector>

#include "shifted/kraskiewicz.hpp"
#include "shifted/reflection_order.hpp"
#include "shifted/tableau.hpp"
#include "shifted/trapezoid.hpp"
#include "shifted/words.hpp"

namespace shifted {

// Orders the trapezoid's root labels by the entries of the balanced filling B
// (the root whose box holds k comes k-th) and realizes that reflection order
// as a word; the result is a reduced word of w_dr(d,r). Rejects non-balanced
// or non-trapezoid input. The trapezoid parameters are read off the shape.
Word bs_to_reduced_word(const ShiftedTableau& b);

// Inverse direction: fills each box of Z(d,r) with the position of its root
// label inside reflection_order(word). The word must be a reduced word of
// some w_dr(d,r) (the parameters are read off the resulting permutation);
// the output filling is balanced.
ShiftedTableau reduced_word_to_bs(const Word& word);

// Standard-tableau padding: fills the complement Z(d,r) minus lambda with
// N+1, ..., |Z| left to right along rows, top to bottom. unpad_syt removes the
// values above N, insisting they sit in exactly that pattern.
ShiftedTableau pad_syt(const ShiftedTableau& t, const TrapezoidContext& ctx);
ShiftedTableau unpad_syt(const ShiftedTableau& t_plus, const TrapezoidContext& ctx);

// Balanced-tableau padding: for i = 1..d in turn applies mu_i times the
// single-box step "swap the two columns at row i's growth frontier in every
// row having both, then write the next value into the new box of row i".
// unpad_bs undoes the steps in reverse order (the largest value must close
// the expected row each time). Both directions keep the filling balanced.
// When steps is supplied, every intermediate single-box result is appended.
ShiftedTableau pad_bs(const ShiftedTableau& b, const TrapezoidContext& ctx,
                      std::vector<ShiftedTableau>* steps = nullptr);
ShiftedTableau unpad_bs(const ShiftedTableau& b_plus, const TrapezoidContext& ctx);

// Intermediates of the composed maps, exposed for tracing.
struct BijectionTrace {
    ShiftedTableau padded_input;    // T+ (syt_to_bs) or B+ (bs_to_syt)
    Word word;                      // the full reduced word of w_dr(d,r)
    ReflectionOrder order;          // its reflection order
    ShiftedTableau insertion_p;     // P of the insertion (bs_to_syt only)
    ShiftedTableau padded_output;   // B+ or T+ on the far side
    std::vector<ShiftedTableau> padding_steps;  // each single-box padding step
};

// The mutually inverse bijections between standard and balanced fillings of
// lambda, composed through the ambient trapezoid:
//   syt_to_bs: pad the tableau, unwind the insertion of the trapezoid's
//     common P tableau against it to recover a reduced word, order the roots
//     accordingly, unpad the balanced result.
//   bs_to_syt: pad the filling, read off its reduced word, insert it and keep
//     the recording tableau, unpad.
ShiftedTableau syt_to_bs(const ShiftedTableau& t, const TrapezoidContext& ctx,
                         BijectionTrace* trace = nullptr);
ShiftedTableau bs_to_syt(const ShiftedTableau& b, const TrapezoidContext& ctx,
                         BijectionTrace* trace = nullptr);

}  // namespace shifted
