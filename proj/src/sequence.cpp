#include "viete/sequence.hpp"

#include <stdexcept>
#include <string>

namespace viete {

namespace {

void require_index(int k) {
  if (k < 1) throw std::invalid_argument("sequence index must be >= 1, got " + std::to_string(k));
}

BigReal eps_from_b(const BigReal& b, const PrecisionContext& ctx) {
  return div(b.ldexp(1), add(BigReal(1), b, ctx), ctx);
}

// b_k = sqrt(r_k) / a_{k+1}
BigReal b_from(const BigReal& r, const BigReal& a_next, const PrecisionContext& ctx) {
  return div(sqrt(r, ctx), a_next, ctx);
}

}  // namespace

BigReal arctan_compose(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  const BigReal denom = sub(BigReal(1), mul(x, y, ctx), ctx);
  if (denom.is_zero()) throw PoleError("arctan composition pole: x*y == 1");
  return div(add(x, y, ctx), denom, ctx);
}

SequenceState init_state(const PrecisionContext& ctx, EvalMode mode) {
  SequenceState s;
  s.k = 1;
  s.a = sqrt(BigReal(2), ctx);
  // (2 - sqrt2)(2 + sqrt2) = 2
  s.r = mode == EvalMode::stable ? div(BigReal(2), add(BigReal(2), s.a, ctx), ctx)
                                 : sub(BigReal(2), s.a, ctx);
  s.a_next = sqrt(add(BigReal(2), s.a, ctx), ctx);
  s.b = b_from(s.r, s.a_next, ctx);
  s.c = s.b;
  s.eps = mode == EvalMode::stable ? eps_from_b(s.b, ctx) : sub(BigReal(1), s.c, ctx);
  return s;
}

SequenceState advance(const SequenceState& state, const PrecisionContext& ctx, EvalMode mode) {
  SequenceState next;
  next.k = state.k + 1;
  next.a = state.a_next;
  next.r = mode == EvalMode::stable ? div(state.r, add(BigReal(2), next.a, ctx), ctx)
                                    : sub(BigReal(2), next.a, ctx);
  next.a_next = sqrt(add(BigReal(2), next.a, ctx), ctx);
  next.b = b_from(next.r, next.a_next, ctx);
  next.c = arctan_compose(state.c, next.b, ctx);
  next.eps = mode == EvalMode::stable ? eps_from_b(next.b, ctx) : sub(BigReal(1), next.c, ctx);
  return next;
}

SequenceState state_at(int k, const PrecisionContext& ctx, EvalMode mode) {
  require_index(k);
  SequenceState s = init_state(ctx, mode);
  while (s.k < k) s = advance(s, ctx, mode);
  return s;
}

std::vector<SequenceState> trajectory(int count, const PrecisionContext& ctx, EvalMode mode) {
  std::vector<SequenceState> out;
  if (count < 1) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(init_state(ctx, mode));
  while (static_cast<int>(out.size()) < count) out.push_back(advance(out.back(), ctx, mode));
  return out;
}

BigReal nested_radical_a(int k, const PrecisionContext& ctx) {
  require_index(k);
  BigReal a = sqrt(BigReal(2), ctx);
  for (int i = 1; i < k; ++i) a = sqrt(add(BigReal(2), a, ctx), ctx);
  return a;
}

BigReal b_of_k(int k, const PrecisionContext& ctx, EvalMode mode) {
  require_index(k);
  // Only the a/r chain is needed; skip the c recurrence.
  BigReal a = sqrt(BigReal(2), ctx);
  BigReal r = mode == EvalMode::stable ? div(BigReal(2), add(BigReal(2), a, ctx), ctx)
                                       : sub(BigReal(2), a, ctx);
  BigReal a_next = sqrt(add(BigReal(2), a, ctx), ctx);
  for (int i = 1; i < k; ++i) {
    a = a_next;
    r = mode == EvalMode::stable ? div(r, add(BigReal(2), a, ctx), ctx) : sub(BigReal(2), a, ctx);
    a_next = sqrt(add(BigReal(2), a, ctx), ctx);
  }
  return b_from(r, a_next, ctx);
}

BigReal c_recurrence(int k, const PrecisionContext& ctx, EvalMode mode) {
  return state_at(k, ctx, mode).c;
}

BigReal c_closed_form(int k, const PrecisionContext& ctx) {
  const BigReal b = b_of_k(k, ctx, EvalMode::stable);
  return div(sub(BigReal(1), b, ctx), add(BigReal(1), b, ctx), ctx);
}

BigReal epsilon(int k, const PrecisionContext& ctx) {
  return eps_from_b(b_of_k(k, ctx, EvalMode::stable), ctx);
}

}  // namespace viete
