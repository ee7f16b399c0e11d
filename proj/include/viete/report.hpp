#pragma once

#include <span>
#include <type_traits>
#include <string>
#include <vector>

#include "viete/precision.hpp"
#include "viete/sequence.hpp"

namespace viete {

struct ConvergenceRow {
  int k = 0;
  std::string c_str;    // c_k, truncated
  std::string eps_str;  // eps_k, truncated
  BigReal scaled_eps;   // 2^{k+1} eps_k
};

struct SeriesPoint {
  int k = 0;
  BigReal a;
  BigReal b;
  BigReal c;
};

// Relative errors of b_k against the same quantity at four times the
// working precision.
struct StudyRow {
  int k = 0;
  int precision_bits = 0;
  BigReal rel_err_naive;
  BigReal rel_err_stable;
};

std::vector<ConvergenceRow> table1(int k_min, int k_max, int digits, const PrecisionContext& ctx,
                                   EvalMode mode = EvalMode::stable);

std::vector<SeriesPoint> figure1_series(int K, const PrecisionContext& ctx,
                                        EvalMode mode = EvalMode::stable);

// Rows ordered by bits_list entry, then k = 1..K.
std::vector<StudyRow> precision_study(int K, std::span<const int> bits_list);

StudyRow study_row(int k, int precision_bits);

inline constexpr int kMaxExpressionDepth = 8;

// Fully parenthesized expression for c_k over the literal 2, sqrt and
// + - / only. 1 is written 2/2 and the product c_{k-1} b_k as a division by
// 1/b_k. Throws std::length_error for k > kMaxExpressionDepth.
std::string render_ck_expression(int k);

enum class Format { csv, tsv, markdown };

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

TextTable to_table(std::span<const ConvergenceRow> rows, int digits);
TextTable to_table(std::span<const SeriesPoint> rows, int digits);
TextTable to_table(std::span<const StudyRow> rows);

// LF-terminated lines; csv/tsv carry a header line, markdown is a pipe table.
std::string emit(const TextTable& table, Format format);

template <typename Row>
std::string emit(std::span<const Row> rows, Format format, int digits = 20) {
  if constexpr (std::is_same_v<Row, StudyRow>) {
    (void)digits;
    return emit(to_table(rows), format);
  } else {
    return emit(to_table(rows, digits), format);
  }
}

// Inverse of emit for csv and tsv.
TextTable parse_delimited(const std::string& text, Format format);

}  // namespace viete
