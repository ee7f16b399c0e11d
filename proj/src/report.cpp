#include "viete/report.hpp"

#include <sstream>
#include <stdexcept>

#include "viete/kernels.hpp"

namespace viete {

std::vector<ConvergenceRow> table1(int k_min, int k_max, int digits, const PrecisionContext& ctx,
                                   EvalMode mode) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("table1 requires 1 <= k_min <= k_max");
  if (ctx.precision_bits() < bits_for_digits(digits)) {
    throw PrecisionError("insufficient precision for requested digits");
  }
  std::vector<ConvergenceRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  SequenceState s = init_state(ctx, mode);
  while (true) {
    if (s.k >= k_min) {
      rows.push_back({s.k, to_decimal(s.c, digits), to_decimal(s.eps, digits),
                      s.eps.ldexp(s.k + 1)});
    }
    if (s.k == k_max) break;
    s = advance(s, ctx, mode);
  }
  return rows;
}

std::vector<SeriesPoint> figure1_series(int K, const PrecisionContext& ctx, EvalMode mode) {
  if (K < 1) throw std::invalid_argument("figure1_series requires K >= 1");
  std::vector<SeriesPoint> out;
  out.reserve(static_cast<std::size_t>(K));
  for (const SequenceState& s : trajectory(K, ctx, mode)) out.push_back({s.k, s.a, s.b, s.c});
  return out;
}

StudyRow study_row(int k, int precision_bits) {
  const PrecisionContext ctx = context_new(precision_bits);
  const PrecisionContext oracle_ctx = context_new(4 * precision_bits);
  const BigReal oracle = b_of_k(k, oracle_ctx, EvalMode::stable);
  StudyRow row;
  row.k = k;
  row.precision_bits = precision_bits;
  row.rel_err_naive = relative_error(b_of_k(k, ctx, EvalMode::naive), oracle, oracle_ctx);
  row.rel_err_stable = relative_error(b_of_k(k, ctx, EvalMode::stable), oracle, oracle_ctx);
  return row;
}

std::vector<StudyRow> precision_study(int K, std::span<const int> bits_list) {
  if (K < 1) throw std::invalid_argument("precision_study requires K >= 1");
  for (int bits : bits_list) {
    if (bits < PrecisionContext::kMinPrecisionBits) throw PrecisionError("precision below minimum");
  }
  return study_grid_parallel(K, bits_list);
}

namespace {

std::string radical(int k) {
  std::string a = "sqrt(2)";
  for (int i = 1; i < k; ++i) a = "sqrt(2+" + a + ")";
  return a;
}

}  // namespace

std::string render_ck_expression(int k) {
  if (k < 1) throw std::invalid_argument("render_ck_expression requires k >= 1");
  if (k > kMaxExpressionDepth) {
    throw std::length_error("expression for k = " + std::to_string(k) + " exceeds the depth cap of " +
                            std::to_string(kMaxExpressionDepth));
  }
  auto b = [](int j) { return "sqrt(2-" + radical(j) + ")/" + radical(j + 1); };
  auto b_reciprocal = [](int j) { return "(" + radical(j + 1) + "/sqrt(2-" + radical(j) + "))"; };
  std::string c = b(1);
  for (int j = 2; j <= k; ++j) {
    c = "(" + c + "+" + b(j) + ")/(2/2-(" + c + ")/" + b_reciprocal(j) + ")";
  }
  return c;
}

TextTable to_table(std::span<const ConvergenceRow> rows, int digits) {
  TextTable t{{"k", "c_k", "eps_k", "scaled_eps"}, {}};
  for (const ConvergenceRow& r : rows) {
    t.rows.push_back({std::to_string(r.k), r.c_str, r.eps_str, to_decimal(r.scaled_eps, digits)});
  }
  return t;
}

TextTable to_table(std::span<const SeriesPoint> rows, int digits) {
  TextTable t{{"k", "a", "b", "c"}, {}};
  for (const SeriesPoint& p : rows) {
    t.rows.push_back({std::to_string(p.k), to_decimal(p.a, digits), to_decimal(p.b, digits),
                      to_decimal(p.c, digits)});
  }
  return t;
}

TextTable to_table(std::span<const StudyRow> rows) {
  TextTable t{{"k", "precision_bits", "rel_err_naive", "rel_err_stable"}, {}};
  for (const StudyRow& r : rows) {
    t.rows.push_back({std::to_string(r.k), std::to_string(r.precision_bits),
                      to_scientific(r.rel_err_naive, 6), to_scientific(r.rel_err_stable, 6)});
  }
  return t;
}

namespace {

char separator(Format format) { return format == Format::tsv ? '\t' : ','; }

void write_delimited(std::ostringstream& out, const std::vector<std::string>& cells, char sep) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << sep;
    out << cells[i];
  }
  out << '\n';
}

void write_pipe(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const std::string& c : cells) out << ' ' << c << " |";
  out << '\n';
}

}  // namespace

std::string emit(const TextTable& table, Format format) {
  std::ostringstream out;
  if (format == Format::markdown) {
    write_pipe(out, table.header);
    out << '|';
    for (std::size_t i = 0; i < table.header.size(); ++i) out << " --- |";
    out << '\n';
    for (const auto& row : table.rows) write_pipe(out, row);
  } else {
    write_delimited(out, table.header, separator(format));
    for (const auto& row : table.rows) write_delimited(out, row, separator(format));
  }
  return out.str();
}

TextTable parse_delimited(const std::string& text, Format format) {
  if (format == Format::markdown) throw std::invalid_argument("markdown tables are write-only");
  const char sep = separator(format);
  TextTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, sep)) cells.push_back(cell);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace viete
