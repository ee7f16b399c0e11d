#pragma once

// Batch evaluation over independent indices. Each *_parallel kernel is an
// OpenMP map whose every element is computed exactly as the *_serial
// reference computes it, so the two return bit-identical results for any
// thread count.

#include <span>
#include <vector>

#include "viete/estimators.hpp"
#include "viete/report.hpp"
#include "viete/sequence.hpp"

namespace viete {

std::vector<SequenceState> states_serial(std::span<const int> ks, const PrecisionContext& ctx,
                                         EvalMode mode = EvalMode::stable);
std::vector<SequenceState> states_parallel(std::span<const int> ks, const PrecisionContext& ctx,
                                           EvalMode mode = EvalMode::stable);

// Row-major over bits_list, then k = 1..K.
std::vector<StudyRow> study_grid_serial(int K, std::span<const int> bits_list);
std::vector<StudyRow> study_grid_parallel(int K, std::span<const int> bits_list);

// pi_from_unity over ks x ms, row-major over ks.
std::vector<PiEstimate> unity_grid_serial(std::span<const int> ks, std::span<const int> ms,
                                          const PrecisionContext& ctx);
std::vector<PiEstimate> unity_grid_parallel(std::span<const int> ks, std::span<const int> ms,
                                            const PrecisionContext& ctx);

int max_threads();

}  // namespace viete
