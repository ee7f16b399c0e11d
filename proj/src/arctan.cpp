#include "viete/precision.hpp"

namespace viete {

BigReal arctan_taylor(const BigReal& x, const PrecisionContext& ctx) {
  if (compare(x.abs(), BigReal(1).ldexp(-1)) == Ordering::greater) {
    throw DomainError("arctan_taylor argument outside |x| <= 1/2");
  }
  if (x.is_zero()) return BigReal{};

  // x - x^3/3 + x^5/5 - ...; stop once a term drops below 2^-working_bits of
  // the partial sum. Terms shrink by at least 4x, so the tail is bounded by
  // a third of the last skipped term.
  const BigReal x2 = mul(x, x, ctx);
  BigReal power = round_to(x, ctx);
  BigReal sum = power;
  const std::int64_t stop = -ctx.working_bits() - 1;
  for (long n = 1;; ++n) {
    power = mul(power, x2, ctx);
    BigReal term = div(power, BigReal(2 * n + 1), ctx);
    if (term.is_zero() || term.ilog2() - sum.ilog2() < stop) break;
    sum = n % 2 == 1 ? sub(sum, term, ctx) : add(sum, term, ctx);
  }
  return sum;
}

BigReal arctan(const BigReal& x, const PrecisionContext& ctx) {
  // arctan x = 2 arctan(x / (1 + sqrt(1 + x^2))) until |x| <= 1/2.
  const BigReal half = BigReal(1).ldexp(-1);
  BigReal arg = round_to(x, ctx);
  std::int64_t doublings = 0;
  while (compare(arg.abs(), half) == Ordering::greater) {
    const BigReal root = sqrt(add(BigReal(1), mul(arg, arg, ctx), ctx), ctx);
    arg = div(arg, add(BigReal(1), root, ctx), ctx);
    ++doublings;
  }
  return arctan_taylor(arg, ctx).ldexp(doublings);
}

namespace {

BigReal arctan_of_reciprocal(long n, const PrecisionContext& ctx) {
  return arctan_taylor(div(BigReal(1), BigReal(n), ctx), ctx);
}

}  // namespace

BigReal pi_reference(const PrecisionContext& ctx, MachinFormula formula) {
  // Extra guard bits absorb the cancellation in the Machin difference.
  const PrecisionContext inner(ctx.precision_bits(), ctx.guard_bits() + 16);
  BigReal pi;
  switch (formula) {
    case MachinFormula::machin:
      pi = sub(arctan_of_reciprocal(5, inner).ldexp(4), arctan_of_reciprocal(239, inner).ldexp(2),
               inner);
      break;
    case MachinFormula::euler:
      pi = add(arctan_of_reciprocal(2, inner), arctan_of_reciprocal(3, inner), inner).ldexp(2);
      break;
  }
  return round_to(pi, ctx);
}

}  // namespace viete
