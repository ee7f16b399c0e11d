#include <doctest.h>

#include "support.hpp"
#include "viete/sequence.hpp"

using namespace viete;
using namespace viete::testing;

namespace {

BigReal pow2(std::int64_t e) { return BigReal(1).ldexp(e); }

bool rel_within(const BigReal& x, const BigReal& ref, std::int64_t log2_tol, const PrecisionContext& ctx) {
  return compare(relative_error(x, ref, ctx), pow2(log2_tol)) != Ordering::greater;
}

}  // namespace

TEST_CASE("init_state") {
  const auto ctx = context_new(128);
  const SequenceState s = init_state(ctx);
  CHECK(s.k == 1);
  CHECK(to_decimal(s.c, 20) == "0.41421356237309504880");
  CHECK(to_decimal(s.a, 20) == "1.41421356237309504880");
  CHECK(to_decimal(s.eps, 20) == "0.58578643762690495119");
  CHECK(s.c == s.b);
  Mpfr one_minus_c1(1024);
  mpfr_sqrt_ui(one_minus_c1.get(), 2, MPFR_RNDN);
  mpfr_ui_sub(one_minus_c1.get(), 2, one_minus_c1.get(), MPFR_RNDN);  // 1 - (sqrt2 - 1)
  CHECK(log2_rel_error(s.eps, one_minus_c1) <= -127);
  CHECK(log2_rel_error(s.r, one_minus_c1) <= -127);  // r_1 = 2 - sqrt 2 as well
  CHECK(log2_rel_error(s.a_next, oracle_a(2)) <= -127);
}

TEST_CASE("advance reproduces the worked values and the k = 4 row") {
  const auto ctx = context_new(128);
  SequenceState s = advance(init_state(ctx), ctx);
  CHECK(s.k == 2);
  CHECK(to_decimal(s.c, 20) == "0.66817863791929891999");
  s = advance(s, ctx);
  CHECK(to_decimal(s.c, 20) == "0.82067879082866033097");
  s = advance(s, ctx);
  CHECK(s.k == 4);
  CHECK(to_decimal(s.c, 20) == "0.90634716901914715794");
  CHECK(to_decimal(s.eps, 20) == "0.09365283098085284205");
}

TEST_CASE("naive mode agrees with stable mode while cancellation is mild") {
  const auto ctx = context_new(256);
  SequenceState naive = init_state(ctx, EvalMode::naive);
  SequenceState stable = init_state(ctx, EvalMode::stable);
  for (int k = 1; k <= 15; ++k) {
    CHECK(to_decimal(naive.c, 20) == to_decimal(stable.c, 20));
    CHECK(to_decimal(naive.eps, 20) == to_decimal(stable.eps, 20));
    naive = advance(naive, ctx, EvalMode::naive);
    stable = advance(stable, ctx, EvalMode::stable);
  }
}

TEST_CASE("nested_radical_a") {
  const auto ctx = context_new(256);
  CHECK(to_decimal(nested_radical_a(1, ctx), 20) == "1.41421356237309504880");
  CHECK(to_decimal(nested_radical_a(2, ctx), 20) == "1.84775906502257351225");
  for (int k : {1, 2, 3, 10, 30}) CHECK(log2_rel_error(nested_radical_a(k, ctx), oracle_a(k)) <= -255);
  const BigReal a50 = nested_radical_a(50, ctx);
  CHECK(compare(a50, BigReal(2)) == Ordering::less);
  CHECK(compare(a50, sub(BigReal(2), pow2(-96), ctx)) == Ordering::greater);
  CHECK_THROWS_AS(nested_radical_a(0, ctx), std::invalid_argument);
}

TEST_CASE("b_of_k") {
  const auto ctx = context_new(256);
  CHECK(to_decimal(b_of_k(1, ctx), 20) == "0.41421356237309504880");
  CHECK(to_decimal(b_of_k(2, ctx), 20) == "0.19891236737965800691");
  for (int k : {1, 2, 5, 20, 64}) CHECK(log2_rel_error(b_of_k(k, ctx), oracle_b(k)) <= -250);
  CHECK(b_of_k(7, ctx) == state_at(7, ctx).b);
  CHECK(b_of_k(7, ctx, EvalMode::naive) == state_at(7, ctx, EvalMode::naive).b);
}

TEST_CASE("b_of_k at k = 40 and 64 bits: stable keeps precision, naive does not") {
  const auto ctx = context_new(64);
  const Mpfr oracle = oracle_b(40);
  CHECK(log2_rel_error(b_of_k(40, ctx, EvalMode::stable), oracle) <= -58);
  CHECK(log2_rel_error(b_of_k(40, ctx, EvalMode::naive), oracle) > -40);
}

TEST_CASE("c_recurrence") {
  const auto ctx = context_new(256);
  CHECK(to_decimal(c_recurrence(15, ctx), 20) == "0.99995206424931502866");
  CHECK(to_decimal(c_recurrence(10, ctx), 20) == "0.99846719455859369106");
  CHECK(c_recurrence(1, ctx) == b_of_k(1, ctx));
  CHECK_THROWS_AS(c_recurrence(0, ctx), std::invalid_argument);
}

TEST_CASE("c_closed_form") {
  const auto ctx = context_new(256);
  // (1 - (sqrt2 - 1)) / (1 + (sqrt2 - 1)) = sqrt2 - 1
  const BigReal sqrt2_minus_1 = sub(sqrt(BigReal(2), ctx), BigReal(1), ctx);
  CHECK(rel_within(c_closed_form(1, ctx), sqrt2_minus_1, -250, ctx));
  CHECK(rel_within(c_closed_form(1, ctx), c_recurrence(1, ctx), -250, ctx));
  CHECK(to_decimal(c_closed_form(2, ctx), 20) == "0.66817863791929891999");
  CHECK(to_decimal(c_closed_form(12, ctx), 20) == "0.99961657831851611515");
  for (int k : {1, 3, 17, 64}) CHECK(log2_rel_error(c_closed_form(k, ctx), oracle_c(k)) <= -250);
}

TEST_CASE("epsilon") {
  const auto ctx = context_new(256);
  CHECK(to_decimal(epsilon(4, ctx), 20) == "0.09365283098085284205");
  CHECK(to_decimal(epsilon(14, ctx), 20) == "0.00009586920364389480");
  Mpfr two_minus_sqrt2(1024);
  mpfr_sqrt_ui(two_minus_sqrt2.get(), 2, MPFR_RNDN);
  mpfr_ui_sub(two_minus_sqrt2.get(), 2, two_minus_sqrt2.get(), MPFR_RNDN);
  CHECK(log2_rel_error(epsilon(1, ctx), two_minus_sqrt2) <= -250);
  // Full relative precision even where c_k is indistinguishable from 1.
  for (int k : {40, 100, 200}) {
    Mpfr ref = oracle_c(k);
    mpfr_ui_sub(ref.get(), 1, ref.get(), MPFR_RNDN);
    CHECK(log2_rel_error(epsilon(k, ctx), ref) <= -250);
  }
}

TEST_CASE("arctan_compose") {
  const auto ctx = context_new(128);
  CHECK(arctan_compose(BigReal(0), BigReal(0), ctx).is_zero());
  const BigReal c2 = arctan_compose(c_recurrence(1, ctx), b_of_k(2, ctx), ctx);
  CHECK(to_decimal(c2, 20) == "0.66817863791929891999");
  CHECK_THROWS_AS(arctan_compose(BigReal(1), BigReal(1), ctx), PoleError);
  CHECK_THROWS_AS(arctan_compose(BigReal(2), BigReal(1).ldexp(-1), ctx), PoleError);
  // x*y one ulp below 1 at working precision is not a pole.
  const BigReal y = sub(BigReal(1), pow2(-ctx.working_bits()), context_new(512));
  CHECK_NOTHROW(arctan_compose(BigReal(1), y, ctx));
}

TEST_CASE("closed form matches the recurrence for k <= 64 at 256 bits") {
  const auto ctx = context_new(256);
  for (const SequenceState& s : trajectory(64, ctx)) {
    CHECK(rel_within(s.c, c_closed_form(s.k, ctx), -240, ctx));
  }
}

TEST_CASE("arctan(b_k) = pi / 2^(k+2) for k <= 40") {
  const auto ctx = context_new(256);
  const BigReal pi = pi_reference(ctx);
  for (const SequenceState& s : trajectory(40, ctx)) {
    const BigReal lhs = arctan_taylor(s.b, ctx);
    CHECK(rel_within(lhs, pi.ldexp(-(s.k + 2)), -240, ctx));
    CHECK(log2_rel_error(lhs, pi_over_pow2(s.k + 2)) <= -240);
  }
}

TEST_CASE("state invariants along the trajectory") {
  const auto ctx = context_new(256);
  const auto states = trajectory(64, ctx);
  const BigReal sqrt2 = sqrt(BigReal(2), ctx);
  const BigReal tol = pow2(-250);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const SequenceState& s = states[i];
    CAPTURE(s.k);
    CHECK(compare(s.a, sqrt2) != Ordering::less);
    CHECK(compare(s.a, BigReal(2)) == Ordering::less);
    CHECK(s.r.sign() > 0);
    CHECK(rel_within(s.r, sub(BigReal(2), s.a, context_new(2048)), -200 + 2 * s.k, ctx));
    CHECK(s.b.sign() > 0);
    // b <= sqrt2 - 1 up to rounding; b_1 is that bound.
    const BigReal b_max = mul(sub(sqrt2, BigReal(1), ctx), add(BigReal(1), tol, ctx), context_new(512));
    CHECK(compare(s.b, b_max) != Ordering::greater);
    CHECK(s.c.sign() > 0);
    CHECK(compare(s.c, BigReal(1)) == Ordering::less);
    // eps = 1 - c = 2b / (1 + b)
    CHECK(compare(sub(sub(BigReal(1), s.c, ctx), s.eps, ctx).abs(), pow2(-240)) != Ordering::greater);
    if (i == 0) continue;
    const SequenceState& p = states[i - 1];
    CHECK(compare(s.a, p.a) == Ordering::greater);
    CHECK(compare(s.b, p.b.ldexp(-1)) == Ordering::less);
    CHECK(compare(s.c, p.c) == Ordering::greater);
    CHECK(compare(s.eps, p.eps) == Ordering::less);
    // r_k (2 + a_k) = r_{k-1}
    CHECK(rel_within(mul(s.r, add(BigReal(2), s.a, ctx), ctx), p.r, -250, ctx));
    // a_k^2 - 2 = a_{k-1}
    CHECK(compare(sub(sub(mul(s.a, s.a, ctx), BigReal(2), ctx), p.a, ctx).abs(), tol) != Ordering::greater);
  }
}

TEST_CASE("eps identity 1 - closed form == 2b/(1+b)") {
  const auto ctx = context_new(256);
  for (int k = 1; k <= 64; ++k) {
    const BigReal lhs = sub(BigReal(1), c_closed_form(k, ctx), ctx);
    CHECK(compare(sub(lhs, epsilon(k, ctx), ctx).abs(), pow2(-240)) != Ordering::greater);
  }
}

TEST_CASE("trajectory matches state_at") {
  const auto ctx = context_new(96);
  const auto states = trajectory(20, ctx, EvalMode::naive);
  REQUIRE(states.size() == 20);
  CHECK(states[19].c == state_at(20, ctx, EvalMode::naive).c);
  CHECK(trajectory(0, ctx).empty());
}
