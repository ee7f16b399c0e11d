#include "viete/checks.hpp"

#include <array>
#include <random>
#include <sstream>

#include "viete/estimators.hpp"
#include "viete/kernels.hpp"
#include "viete/report.hpp"
#include "viete/sequence.hpp"

namespace viete {

namespace {

BigReal pow2(std::int64_t e) { return BigReal(1).ldexp(e); }

bool at_most(const BigReal& x, const BigReal& bound) {
  return compare(x, bound) != Ordering::greater;
}

bool strictly_between(const BigReal& x, double lo, double hi, const PrecisionContext& ctx) {
  // Bounds are short decimals; compare against exact ratios lo*100/100.
  const BigReal lo_r = div(BigReal(static_cast<long>(lo * 100 + 0.5)), BigReal(100), ctx);
  const BigReal hi_r = div(BigReal(static_cast<long>(hi * 100 + 0.5)), BigReal(100), ctx);
  return compare(x, lo_r) == Ordering::greater && compare(x, hi_r) == Ordering::less;
}

CheckResult make(int id, std::string name) { return {id, std::move(name), true, {}}; }

void fail(CheckResult& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

}  // namespace

const std::vector<PublishedRow>& published_table1() {
  static const std::vector<PublishedRow> rows = {
      {4, "0.90634716901914715794", "0.09365283098085284205"},
      {5, "0.95207914670092534858", "0.04792085329907465141"},
      {6, "0.97575264993237653232", "0.02424735006762346767"},
      {7, "0.98780284145152917070", "0.01219715854847082929"},
      {8, "0.99388282491415211156", "0.00611717508584788843"},
      {9, "0.99693673501114949604", "0.00306326498885050395"},
      {10, "0.99846719455859369106", "0.00153280544140630893"},
      {11, "0.99923330359286120490", "0.00076669640713879509"},
      {12, "0.99961657831851611515", "0.00038342168148388484"},
      {13, "0.99980827078273533526", "0.00019172921726466473"},
      {14, "0.99990413079635610519", "0.00009586920364389480"},
      {15, "0.99995206424931502866", "0.00004793575068497133"},
  };
  return rows;
}

CheckResult check_table1() {
  CheckResult r = make(1, "Table 1 reproduction (k = 4..15, 20 truncated digits)");
  const auto rows = table1(4, 15, 20, context_new(256));
  const auto& expected = published_table1();
  if (rows.size() != expected.size()) {
    fail(r, "row count mismatch");
    return r;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].c_str != expected[i].c || rows[i].eps_str != expected[i].eps) {
      fail(r, "k=" + std::to_string(rows[i].k) + " got " + rows[i].c_str + " / " + rows[i].eps_str);
    }
  }
  if (r.passed) r.detail = "24/24 strings equal";
  return r;
}

CheckResult check_worked_values() {
  CheckResult r = make(2, "worked values c_1, c_2, c_3");
  const std::array<const char*, 3> expected = {
      "0.41421356237309504880", "0.66817863791929891999", "0.82067879082866033097"};
  const auto rows = table1(1, 3, 20, context_new(256));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (rows[i].c_str != expected[i]) fail(r, "c_" + std::to_string(i + 1) + " = " + rows[i].c_str);
  }
  if (r.passed) r.detail = "3/3 strings equal";
  return r;
}

CheckResult check_oracle_equivalence() {
  CheckResult r = make(3, "c recurrence == closed form (k <= 64); arctan(b_k) == pi/2^(k+2) (k <= 40)");
  const PrecisionContext ctx = context_new(256);
  const BigReal tol = pow2(-240);
  const auto states = trajectory(64, ctx);
  for (const SequenceState& s : states) {
    if (!at_most(relative_error(s.c, c_closed_form(s.k, ctx), ctx), tol)) {
      fail(r, "closed form mismatch at k=" + std::to_string(s.k));
    }
  }
  const BigReal pi = pi_reference(ctx);
  for (int k = 1; k <= 40; ++k) {
    const BigReal lhs = arctan_taylor(states[static_cast<std::size_t>(k - 1)].b, ctx);
    if (!at_most(relative_error(lhs, pi.ldexp(-(k + 2)), ctx), tol)) {
      fail(r, "arctan(b_k) != pi/2^(k+2) at k=" + std::to_string(k));
    }
  }
  if (r.passed) r.detail = "104 comparisons within 2^-240 relative";
  return r;
}

CheckResult check_error_halving() {
  CheckResult r = make(4, "eps_{k+1}/eps_k in (0.49, 0.51) for 10 <= k <= 40");
  const PrecisionContext ctx = context_new(256);
  BigReal prev = epsilon(10, ctx);
  for (int k = 10; k <= 40; ++k) {
    const BigReal next = epsilon(k + 1, ctx);
    const BigReal ratio = div(next, prev, ctx);
    if (!strictly_between(ratio, 0.49, 0.51, ctx)) {
      fail(r, "k=" + std::to_string(k) + " ratio " + to_scientific(ratio, 8));
    }
    prev = next;
  }
  if (r.passed) r.detail = "31 ratios inside the band";
  return r;
}

CheckResult check_unity_rate() {
  CheckResult r = make(5, "|2^(k+1)(1-c_k^m)/m - pi| in [0.5, 1.5] pi^2/2^(k+2), m in {1,2,3,5}, 10 <= k <= 40");
  const PrecisionContext ctx = context_new(256);
  std::vector<int> ks;
  for (int k = 10; k <= 40; ++k) ks.push_back(k);
  const std::array<int, 4> ms = {1, 2, 3, 5};
  const auto grid = unity_grid_parallel(ks, ms, ctx);
  const BigReal pi = pi_reference(ctx);
  const BigReal pi2 = mul(pi, pi, ctx);
  int failures = 0;
  for (const PiEstimate& e : grid) {
    const BigReal scale = pi2.ldexp(-(e.depth + 2));
    const BigReal ratio = div(e.abs_error, scale, ctx);
    const bool ok = compare(ratio, div(BigReal(1), BigReal(2), ctx)) != Ordering::less &&
                    compare(ratio, div(BigReal(3), BigReal(2), ctx)) != Ordering::greater;
    if (!ok) {
      ++failures;
      fail(r, "k=" + std::to_string(e.depth) + " m=" + std::to_string(e.m) + " error/(pi^2/2^(k+2)) = " +
                  to_scientific(ratio, 6));
    }
  }
  if (r.passed) {
    r.detail = "124 estimates inside the band";
  } else {
    r.detail += " (" + std::to_string(failures) + "/" + std::to_string(grid.size()) + " outside)";
  }
  return r;
}

CheckResult check_ratio_limit() {
  CheckResult r = make(6, "b_{k+1}/b_k strictly increasing and < 1/2 (k <= 60); |ratio - 1/2| <= 1e-13 at k = 20");
  const PrecisionContext ctx = context_new(256);
  const auto states = trajectory(61, ctx);
  const BigReal half = pow2(-1);
  BigReal prev;
  for (int k = 1; k <= 60; ++k) {
    const BigReal ratio = div(states[static_cast<std::size_t>(k)].b, states[static_cast<std::size_t>(k - 1)].b, ctx);
    if (compare(ratio, half) != Ordering::less) fail(r, "ratio >= 1/2 at k=" + std::to_string(k));
    if (k > 1 && compare(ratio, prev) != Ordering::greater) {
      fail(r, "ratio not increasing at k=" + std::to_string(k));
    }
    prev = ratio;
  }
  const BigReal gap = sub(half, ratio_b(20, ctx), ctx).abs();
  const BigReal tol = div(BigReal(1), BigReal::from_mpz(mpz_class("10000000000000")), ctx);
  if (!at_most(gap, tol)) fail(r, "|ratio_20 - 1/2| = " + to_scientific(gap, 6));
  if (r.passed) r.detail = "|ratio_20 - 1/2| = " + to_scientific(gap, 6);
  return r;
}

CheckResult check_viete_product() {
  CheckResult r = make(7, "Viete product error strictly decreasing, successive ratio in [3.8, 4.2] for 5 <= K <= 25");
  const PrecisionContext ctx = context_new(256);
  BigReal prev = viete_product_pi(5, ctx).abs_error;
  for (int K = 5; K <= 25; ++K) {
    const BigReal next = viete_product_pi(K + 1, ctx).abs_error;
    if (compare(next, prev) != Ordering::less) fail(r, "error not decreasing at K=" + std::to_string(K + 1));
    const BigReal ratio = div(prev, next, ctx);
    const bool ok = compare(ratio, div(BigReal(38), BigReal(10), ctx)) != Ordering::less &&
                    compare(ratio, div(BigReal(42), BigReal(10), ctx)) != Ordering::greater;
    if (!ok) fail(r, "K=" + std::to_string(K) + " ratio " + to_scientific(ratio, 6));
    prev = next;
  }
  if (r.passed) r.detail = "21 ratios inside the band";
  return r;
}

CheckResult check_arctan_identities(const CheckOptions& options) {
  CheckResult r = make(8, "arctan partial sums, tail split residuals, geometric tail bound");
  const PrecisionContext ctx = context_new(256);
  const BigReal pi = pi_reference(ctx);
  const BigReal tol = mul(pi, pow2(-240), ctx);

  // Partial sums, incrementally; each prefix equals arctan_sum_quarter_pi(K).
  SequenceState s = init_state(ctx);
  BigReal sum;
  for (int K = 1; K <= 60; ++K) {
    if (K > 1) s = advance(s, ctx);
    sum = add(sum, arctan_taylor(s.b, ctx), ctx);
    const BigReal target = sub(pi.ldexp(-2), pi.ldexp(-2 - K), ctx);
    if (!at_most(sub(sum, target, ctx).abs(), tol)) fail(r, "partial sum off at K=" + std::to_string(K));
  }
  if (!at_most(sub(arctan_sum_quarter_pi(60, ctx).value, sum, ctx).abs(), tol)) {
    fail(r, "arctan_sum_quarter_pi(60) disagrees with the incremental sum");
  }

  // residual(k, L) = pi/4 - arctan(c_k) - sum_{l=k+1..L} arctan(b_l).
  const auto states = trajectory(40, ctx);
  std::vector<BigReal> atan_b;
  std::vector<BigReal> atan_c;
  for (const SequenceState& st : states) {
    atan_b.push_back(arctan_taylor(st.b, ctx));
    atan_c.push_back(arctan(st.c, ctx));
  }
  int pairs = 0;
  for (int k = 1; k < 40; ++k) {
    BigReal residual = sub(pi.ldexp(-2), atan_c[static_cast<std::size_t>(k - 1)], ctx);
    for (int L = k + 1; L <= 40; ++L) {
      residual = sub(residual, atan_b[static_cast<std::size_t>(L - 1)], ctx);
      ++pairs;
      if (!at_most(sub(residual, pi.ldexp(-2 - L), ctx).abs(), tol)) {
        fail(r, "tail split residual off at k=" + std::to_string(k) + " L=" + std::to_string(L));
      }
    }
  }
  if (!at_most(sub(tail_split_check(3, 10, ctx), pi.ldexp(-12), ctx).abs(), tol)) {
    fail(r, "tail_split_check(3, 10) != pi/2^12");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick_k(1, 39);
  for (int i = 0; i < 50; ++i) {
    const int k = pick_k(rng);
    const int L = std::uniform_int_distribution<int>(k + 1, 40)(rng);
    if (!tail_bound_check(k, L, ctx).holds) {
      fail(r, "tail bound violated at k=" + std::to_string(k) + " L=" + std::to_string(L) + " (seed " +
                  std::to_string(options.seed) + ")");
    }
  }
  if (r.passed) r.detail = "60 sums, " + std::to_string(pairs) + " residuals, 50 random tail bounds";
  return r;
}

CheckResult check_cancellation() {
  CheckResult r = make(9, "k=40 at 64 bits: naive b_k rel. error > 2^-40, stable < 2^-56 (512-bit oracle)");
  const PrecisionContext ctx = context_new(64);
  const PrecisionContext oracle_ctx = context_new(512);
  const BigReal oracle = b_of_k(40, oracle_ctx);
  const BigReal naive = relative_error(b_of_k(40, ctx, EvalMode::naive), oracle, oracle_ctx);
  const BigReal stable = relative_error(b_of_k(40, ctx, EvalMode::stable), oracle, oracle_ctx);
  if (compare(naive, pow2(-40)) != Ordering::greater) fail(r, "naive error only " + to_scientific(naive, 4));
  if (compare(stable, pow2(-56)) != Ordering::less) fail(r, "stable error " + to_scientific(stable, 4));
  if (r.passed) {
    r.detail = "naive " + to_scientific(naive, 4) + ", stable " + to_scientific(stable, 4);
  }
  return r;
}

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  return {check_table1(),     check_worked_values(), check_oracle_equivalence(),
          check_error_halving(), check_unity_rate(),  check_ratio_limit(),
          check_viete_product(), check_arctan_identities(options), check_cancellation()};
}

std::string format_result(const CheckResult& result) {
  std::ostringstream out;
  out << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.name;
  if (!result.detail.empty()) out << ": " << result.detail;
  return out.str();
}

}  // namespace viete
