#include "viete/kernels.hpp"

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace viete {

namespace {

// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region
// are captured and the first one is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(viete_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct GridIndex {
  std::size_t outer;
  std::size_t inner;
};

GridIndex split(std::size_t flat, std::size_t inner_size) {
  return {flat / inner_size, flat % inner_size};
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SequenceState> states_serial(std::span<const int> ks, const PrecisionContext& ctx,
                                         EvalMode mode) {
  std::vector<SequenceState> out;
  out.reserve(ks.size());
  for (int k : ks) out.push_back(state_at(k, ctx, mode));
  return out;
}

std::vector<SequenceState> states_parallel(std::span<const int> ks, const PrecisionContext& ctx,
                                           EvalMode mode) {
  std::vector<SequenceState> out(ks.size());
  parallel_for(static_cast<std::ptrdiff_t>(ks.size()),
               [&](std::size_t i) { out[i] = state_at(ks[i], ctx, mode); });
  return out;
}

std::vector<StudyRow> study_grid_serial(int K, std::span<const int> bits_list) {
  std::vector<StudyRow> out;
  if (K < 1) return out;
  out.reserve(bits_list.size() * static_cast<std::size_t>(K));
  for (int bits : bits_list) {
    for (int k = 1; k <= K; ++k) out.push_back(study_row(k, bits));
  }
  return out;
}

std::vector<StudyRow> study_grid_parallel(int K, std::span<const int> bits_list) {
  if (K < 1) return {};
  const auto per_bits = static_cast<std::size_t>(K);
  std::vector<StudyRow> out(bits_list.size() * per_bits);
  parallel_for(static_cast<std::ptrdiff_t>(out.size()), [&](std::size_t i) {
    const GridIndex g = split(i, per_bits);
    out[i] = study_row(static_cast<int>(g.inner) + 1, bits_list[g.outer]);
  });
  return out;
}

std::vector<PiEstimate> unity_grid_serial(std::span<const int> ks, std::span<const int> ms,
                                          const PrecisionContext& ctx) {
  std::vector<PiEstimate> out;
  out.reserve(ks.size() * ms.size());
  for (int k : ks) {
    for (int m : ms) out.push_back(pi_from_unity(k, m, ctx));
  }
  return out;
}

std::vector<PiEstimate> unity_grid_parallel(std::span<const int> ks, std::span<const int> ms,
                                            const PrecisionContext& ctx) {
  if (ms.empty()) return {};
  std::vector<PiEstimate> out(ks.size() * ms.size());
  parallel_for(static_cast<std::ptrdiff_t>(out.size()), [&](std::size_t i) {
    const GridIndex g = split(i, ms.size());
    out[i] = pi_from_unity(ks[g.outer], ms[g.inner], ctx);
  });
  return out;
}

}  // namespace viete
