#include <doctest.h>

#include <omp.h>

#include <stdexcept>
#include <vector>

#include "viete/kernels.hpp"

using namespace viete;

namespace {

bool same_state(const SequenceState& x, const SequenceState& y) {
  return x.k == y.k && x.a == y.a && x.r == y.r && x.b == y.b && x.c == y.c && x.eps == y.eps &&
         x.a_next == y.a_next;
}

bool same_row(const StudyRow& x, const StudyRow& y) {
  return x.k == y.k && x.precision_bits == y.precision_bits && x.rel_err_naive == y.rel_err_naive &&
         x.rel_err_stable == y.rel_err_stable;
}

bool same_estimate(const PiEstimate& x, const PiEstimate& y) {
  return x.method == y.method && x.depth == y.depth && x.m == y.m && x.value == y.value &&
         x.abs_error == y.abs_error;
}

// Restores the thread count on scope exit.
class ThreadCount {
 public:
  explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

}  // namespace

TEST_CASE("states_parallel is bit-identical to states_serial") {
  const auto ctx = context_new(192);
  const std::vector<int> ks{1, 2, 3, 7, 15, 31, 64, 5, 5, 100};
  for (EvalMode mode : {EvalMode::stable, EvalMode::naive}) {
    const auto ref = states_serial(ks, ctx, mode);
    REQUIRE(ref.size() == ks.size());
    for (int threads : {1, 2, 4}) {
      ThreadCount tc(threads);
      CAPTURE(threads);
      const auto got = states_parallel(ks, ctx, mode);
      REQUIRE(got.size() == ref.size());
      for (std::size_t i = 0; i < ks.size(); ++i) {
        CHECK(got[i].k == ks[i]);
        CHECK(same_state(got[i], ref[i]));
      }
    }
  }
  CHECK(states_parallel(std::vector<int>{}, ctx).empty());
}

TEST_CASE("study_grid_parallel is bit-identical to study_grid_serial") {
  const std::vector<int> bits{16, 40, 64, 100};
  const auto ref = study_grid_serial(30, bits);
  REQUIRE(ref.size() == 120);
  for (int threads : {1, 2, 4}) {
    ThreadCount tc(threads);
    CAPTURE(threads);
    const auto got = study_grid_parallel(30, bits);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(same_row(got[i], ref[i]));
  }
  CHECK(study_grid_parallel(0, bits).empty());
}

TEST_CASE("unity_grid_parallel is bit-identical to unity_grid_serial") {
  const auto ctx = context_new(160);
  const std::vector<int> ks{1, 4, 15, 40, 90};
  const std::vector<int> ms{1, 2, 3, 8};
  const auto ref = unity_grid_serial(ks, ms, ctx);
  REQUIRE(ref.size() == ks.size() * ms.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CHECK(ref[i].depth == ks[i / ms.size()]);
    CHECK(ref[i].m == ms[i % ms.size()]);
  }
  for (int threads : {1, 2, 4}) {
    ThreadCount tc(threads);
    CAPTURE(threads);
    const auto got = unity_grid_parallel(ks, ms, ctx);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(same_estimate(got[i], ref[i]));
  }
}

TEST_CASE("exceptions inside parallel kernels reach the caller") {
  ThreadCount tc(4);
  const auto ctx = context_new(64);
  const std::vector<int> ks{3, 4, 0, 5, 6, 7};
  CHECK_THROWS_AS(states_parallel(ks, ctx), std::invalid_argument);
  CHECK_THROWS_AS(states_serial(ks, ctx), std::invalid_argument);
  const std::vector<int> ms{1, 0};
  CHECK_THROWS_AS(unity_grid_parallel(std::vector<int>{3, 4}, ms, ctx), std::invalid_argument);
  CHECK_THROWS_AS(study_grid_parallel(3, std::vector<int>{64, 8}), PrecisionError);
}

TEST_CASE("max_threads") {
  ThreadCount tc(3);
  CHECK(max_threads() == 3);
}
