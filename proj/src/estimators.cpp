#include "viete/estimators.hpp"

#include <stdexcept>
#include <string>

#include "viete/sequence.hpp"

namespace viete {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const char* to_string(PiMethod method) {
  switch (method) {
    case PiMethod::viete_product: return "viete";
    case PiMethod::arctan_sum: return "arctan-sum";
    case PiMethod::unity_limit: return "unity";
  }
  return "?";
}

PiEstimate viete_product_pi(int K, const PrecisionContext& ctx) {
  require(K >= 1, "viete_product_pi requires K >= 1");
  BigReal a = sqrt(BigReal(2), ctx);
  BigReal product = a.ldexp(-1);
  for (int k = 2; k <= K; ++k) {
    a = sqrt(add(BigReal(2), a, ctx), ctx);
    product = mul(product, a.ldexp(-1), ctx);
  }
  PiEstimate est;
  est.method = PiMethod::viete_product;
  est.depth = K;
  est.value = div(BigReal(2), product, ctx);
  est.abs_error = sub(est.value, pi_reference(ctx), ctx).abs();
  return est;
}

PiEstimate arctan_sum_quarter_pi(int K, const PrecisionContext& ctx) {
  require(K >= 1, "arctan_sum_quarter_pi requires K >= 1");
  SequenceState s = init_state(ctx);
  BigReal sum = arctan_taylor(s.b, ctx);
  for (int k = 2; k <= K; ++k) {
    s = advance(s, ctx);
    sum = add(sum, arctan_taylor(s.b, ctx), ctx);
  }
  PiEstimate est;
  est.method = PiMethod::arctan_sum;
  est.depth = K;
  est.value = sum;
  est.abs_error = sub(sum, pi_reference(ctx).ldexp(-2), ctx).abs();
  return est;
}

PiEstimate pi_from_unity(int k, int m, const PrecisionContext& ctx) {
  require(k >= 1, "pi_from_unity requires k >= 1");
  require(m >= 1, "pi_from_unity requires m >= 1");
  const SequenceState s = state_at(k, ctx);
  // 1 + c + ... + c^{m-1} by Horner.
  BigReal geometric(1);
  for (int i = 1; i < m; ++i) geometric = add(BigReal(1), mul(geometric, s.c, ctx), ctx);
  const BigReal one_minus_cm = mul(s.eps, geometric, ctx);
  PiEstimate est;
  est.method = PiMethod::unity_limit;
  est.depth = k;
  est.m = m;
  est.value = div(one_minus_cm.ldexp(k + 1), BigReal(m), ctx);
  est.abs_error = sub(est.value, pi_reference(ctx), ctx).abs();
  return est;
}

BigReal ratio_b(int k, const PrecisionContext& ctx) {
  require(k >= 1, "ratio_b requires k >= 1");
  const SequenceState s = state_at(k, ctx);
  return div(advance(s, ctx).b, s.b, ctx);
}

TailBound tail_bound_check(int k, int L, const PrecisionContext& ctx) {
  require(k >= 0 && L >= k, "tail_bound_check requires L >= k >= 0");
  TailBound out{BigReal{}, BigReal{}, true};
  if (L == k) return out;
  SequenceState s = init_state(ctx);
  const BigReal b1 = s.b;
  for (int l = 1; l <= L; ++l) {
    if (l > 1) s = advance(s, ctx);
    if (l <= k) continue;
    out.sum_b = add(out.sum_b, s.b, ctx);
    out.sum_geo = add(out.sum_geo, b1.ldexp(-(l - 1)), ctx);
  }
  out.holds = compare(out.sum_b, out.sum_geo) == Ordering::less;
  return out;
}

BigReal tail_split_check(int k, int L, const PrecisionContext& ctx) {
  require(k >= 1 && L > k, "tail_split_check requires L > k >= 1");
  SequenceState s = state_at(k, ctx);
  BigReal residual = sub(pi_reference(ctx).ldexp(-2), arctan(s.c, ctx), ctx);
  for (int l = k + 1; l <= L; ++l) {
    s = advance(s, ctx);
    residual = sub(residual, arctan_taylor(s.b, ctx), ctx);
  }
  return residual;
}

}  // namespace viete
