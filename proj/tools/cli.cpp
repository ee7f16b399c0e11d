#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "viete/checks.hpp"
#include "viete/kernels.hpp"

namespace viete::cli {

namespace {

const std::map<std::string, Format> kFormats = {
    {"csv", Format::csv}, {"tsv", Format::tsv}, {"markdown", Format::markdown}};
const std::map<std::string, EvalMode> kModes = {{"naive", EvalMode::naive},
                                                {"stable", EvalMode::stable}};
const std::map<std::string, PiMethod> kMethods = {{"viete", PiMethod::viete_product},
                                                  {"arctan-sum", PiMethod::arctan_sum},
                                                  {"unity", PiMethod::unity_limit}};

void require_positive(int value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be a positive integer");
}

void validate(const CliConfig& c, const CLI::App& sub) {
  if (c.precision_bits < PrecisionContext::kMinPrecisionBits) {
    throw UsageError("precision below minimum (--precision-bits must be >= 16)");
  }
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  switch (c.subcommand) {
    case Subcommand::table:
      require_positive(c.k_min, "--k-min");
      require_positive(c.digits, "--digits");
      if (c.k_max < c.k_min) throw UsageError("--k-max must be >= --k-min");
      if (c.precision_bits < bits_for_digits(c.digits)) {
        throw UsageError("insufficient precision for requested digits (" + std::to_string(c.digits) +
                         " digits need --precision-bits >= " + std::to_string(bits_for_digits(c.digits)) +
                         ")");
      }
      break;
    case Subcommand::series:
      if (!given("--K")) throw UsageError("series requires --K");
      require_positive(c.K, "--K");
      if (c.precision_bits < bits_for_digits(c.digits)) {
        throw UsageError("insufficient precision for requested digits");
      }
      break;
    case Subcommand::pi:
      if (c.method == PiMethod::unity_limit) {
        if (!given("--k")) throw UsageError("pi --method unity requires --k");
        if (given("--K")) throw UsageError("pi --method unity takes --k and --m, not --K");
        require_positive(c.k, "--k");
        require_positive(c.m, "--m");
      } else {
        if (!given("--K")) throw UsageError("pi --method viete|arctan-sum requires --K");
        if (given("--k") || given("--m")) throw UsageError("--k/--m apply only to --method unity");
        require_positive(c.K, "--K");
      }
      if (c.precision_bits < bits_for_digits(c.digits)) {
        throw UsageError("insufficient precision for requested digits");
      }
      break;
    case Subcommand::ratio:
      if (!given("--k")) throw UsageError("ratio requires --k");
      require_positive(c.k, "--k");
      if (c.precision_bits < bits_for_digits(c.digits)) {
        throw UsageError("insufficient precision for requested digits");
      }
      break;
    case Subcommand::study:
      if (!given("--K") || !given("--bits")) throw UsageError("study requires --K and --bits");
      require_positive(c.K, "--K");
      for (int b : c.bits) {
        if (b < PrecisionContext::kMinPrecisionBits) throw UsageError("--bits entries must be >= 16");
      }
      break;
    case Subcommand::expr:
      if (!given("--k")) throw UsageError("expr requires --k");
      require_positive(c.k, "--k");
      if (c.k > kMaxExpressionDepth) {
        throw UsageError("expr --k is capped at " + std::to_string(kMaxExpressionDepth));
      }
      break;
    case Subcommand::check:
      break;
  }
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& argv) {
  CliConfig c;
  CLI::App app{"Viete-like recurrences converging to unity: tables, pi estimators, checks", "viete"};
  app.require_subcommand(1);
  app.add_option("--precision-bits", c.precision_bits, "working precision in bits")->capture_default_str();
  app.add_option("--format", c.format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  app.add_option("--mode", c.mode, "2 - a_k evaluation (table, series)")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));

  auto* table = app.add_subcommand("table", "c_k and eps_k, truncated");
  table->add_option("--k-min", c.k_min)->capture_default_str();
  table->add_option("--k-max", c.k_max)->capture_default_str();
  table->add_option("--digits", c.digits)->capture_default_str();

  auto* series = app.add_subcommand("series", "a_k, b_k, c_k for k = 1..K");
  series->add_option("--K", c.K);
  series->add_option("--digits", c.digits)->capture_default_str();

  auto* pi = app.add_subcommand("pi", "pi estimators");
  pi->add_option("--method", c.method)
      ->required()
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  pi->add_option("--K", c.K, "depth for viete and arctan-sum");
  pi->add_option("--k", c.k, "index for unity");
  pi->add_option("--m", c.m, "power for unity")->capture_default_str();
  pi->add_option("--digits", c.digits)->capture_default_str();

  auto* ratio = app.add_subcommand("ratio", "b_{k+1} / b_k");
  ratio->add_option("--k", c.k);
  ratio->add_option("--digits", c.digits)->capture_default_str();

  auto* study = app.add_subcommand("study", "naive vs stable relative error of b_k");
  study->add_option("--K", c.K);
  study->add_option("--bits", c.bits)->delimiter(',');

  auto* expr = app.add_subcommand("expr", "c_k as an expression in sqrt and 2");
  expr->add_option("--k", c.k);

  auto* check = app.add_subcommand("check", "run the property suite");
  check->add_option("--seed", c.seed, "seed for randomized properties")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), 0);
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }

  const std::vector<std::pair<CLI::App*, Subcommand>> subs = {
      {table, Subcommand::table}, {series, Subcommand::series}, {pi, Subcommand::pi},
      {ratio, Subcommand::ratio}, {study, Subcommand::study},   {expr, Subcommand::expr},
      {check, Subcommand::check}};
  for (const auto& [sub, tag] : subs) {
    if (sub->parsed()) {
      c.subcommand = tag;
      validate(c, *sub);
      return c;
    }
  }
  throw UsageError("a subcommand is required\n" + app.help());
}

namespace {

std::string run_pi(const CliConfig& c, const PrecisionContext& ctx) {
  PiEstimate est;
  switch (c.method) {
    case PiMethod::viete_product: est = viete_product_pi(c.K, ctx); break;
    case PiMethod::arctan_sum: est = arctan_sum_quarter_pi(c.K, ctx); break;
    case PiMethod::unity_limit: est = pi_from_unity(c.k, c.m, ctx); break;
  }
  TextTable t{{"method", "depth", "m", "value", "abs_error"}, {}};
  t.rows.push_back({to_string(est.method), std::to_string(est.depth), std::to_string(est.m),
                    to_decimal(est.value, c.digits), to_scientific(est.abs_error, 6)});
  return emit(t, c.format);
}

std::string run_check(const CliConfig& c, int& exit_code) {
  std::ostringstream out;
  bool all = true;
  for (const CheckResult& r : run_checks(CheckOptions{c.seed})) {
    out << format_result(r) << '\n';
    all = all && r.passed;
  }
  exit_code = all ? 0 : 1;
  return out.str();
}

}  // namespace

RunResult run(const CliConfig& c) {
  RunResult result;
  try {
    const PrecisionContext ctx = context_new(c.precision_bits);
    switch (c.subcommand) {
      case Subcommand::table: {
        const auto rows = table1(c.k_min, c.k_max, c.digits, ctx, c.mode);
        result.out = emit<ConvergenceRow>(rows, c.format, c.digits);
        break;
      }
      case Subcommand::series: {
        const auto points = figure1_series(c.K, ctx, c.mode);
        result.out = emit<SeriesPoint>(points, c.format, c.digits);
        break;
      }
      case Subcommand::pi:
        result.out = run_pi(c, ctx);
        break;
      case Subcommand::ratio: {
        TextTable t{{"k", "ratio"}, {}};
        t.rows.push_back({std::to_string(c.k), to_decimal(ratio_b(c.k, ctx), c.digits)});
        result.out = emit(t, c.format);
        break;
      }
      case Subcommand::study: {
        const auto rows = precision_study(c.K, c.bits);
        result.out = emit<StudyRow>(rows, c.format);
        break;
      }
      case Subcommand::expr:
        result.out = render_ck_expression(c.k) + "\n";
        break;
      case Subcommand::check:
        result.out = run_check(c, result.exit_code);
        if (result.exit_code != 0) result.err = "check: one or more properties failed\n";
        break;
    }
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

RunResult main_entry(const std::vector<std::string>& argv) {
  try {
    return run(parse_args(argv));
  } catch (const UsageError& e) {
    RunResult r;
    r.exit_code = e.exit_code();
    (e.exit_code() == 0 ? r.out : r.err) = std::string(e.what()) + "\n";
    return r;
  }
}

}  // namespace viete::cli
