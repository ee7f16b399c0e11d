#pragma once

// The recurrence set converging to unity:
//
//   a_1 = sqrt(2),  a_k = sqrt(2 + a_{k-1})
//   b_k = sqrt(2 - a_k) / a_{k+1}
//   c_1 = b_1,      c_k = (c_{k-1} + b_k) / (1 - c_{k-1} b_k)
//   eps_k = 1 - c_k
//
// Stable mode never forms 2 - a_k by subtraction. It carries the residual
// r_k = 2 - a_k through r_k = r_{k-1} / (2 + a_k), which follows from
// 4 - a_k^2 = 2 - a_{k-1}, and evaluates eps_k as 2 b_k / (1 + b_k).
// Naive mode follows the formulas literally and loses about two bits of
// relative precision in b_k per step.

#include <vector>

#include "viete/precision.hpp"

namespace viete {

enum class EvalMode { naive, stable };

struct SequenceState {
  int k = 0;
  BigReal a;       // a_k
  BigReal r;       // 2 - a_k
  BigReal b;       // b_k
  BigReal c;       // c_k
  BigReal eps;     // 1 - c_k
  BigReal a_next;  // a_{k+1}, needed by b_k
};

SequenceState init_state(const PrecisionContext& ctx, EvalMode mode = EvalMode::stable);

// Throws PoleError if 1 - c b is zero at working precision.
SequenceState advance(const SequenceState& state, const PrecisionContext& ctx,
                      EvalMode mode = EvalMode::stable);

// Iterates from k = 1; k must be >= 1.
SequenceState state_at(int k, const PrecisionContext& ctx, EvalMode mode = EvalMode::stable);

// States k = 1..count in order.
std::vector<SequenceState> trajectory(int count, const PrecisionContext& ctx,
                                      EvalMode mode = EvalMode::stable);

BigReal nested_radical_a(int k, const PrecisionContext& ctx);
BigReal b_of_k(int k, const PrecisionContext& ctx, EvalMode mode = EvalMode::stable);
BigReal c_recurrence(int k, const PrecisionContext& ctx, EvalMode mode = EvalMode::stable);

// (1 - b_k) / (1 + b_k), the closed form obtained by telescoping
// arctan(b_k) = pi / 2^{k+2}; an oracle for c_recurrence.
BigReal c_closed_form(int k, const PrecisionContext& ctx);

// 2 b_k / (1 + b_k): equals 1 - c_k without cancellation.
BigReal epsilon(int k, const PrecisionContext& ctx);

// (x + y) / (1 - x y). Throws PoleError when x y rounds to 1.
BigReal arctan_compose(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

}  // namespace viete
