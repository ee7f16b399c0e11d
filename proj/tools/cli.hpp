#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "viete/estimators.hpp"
#include "viete/report.hpp"
#include "viete/sequence.hpp"

namespace viete::cli {

enum class Subcommand { table, series, pi, ratio, study, expr, check };

struct CliConfig {
  Subcommand subcommand = Subcommand::check;
  int precision_bits = 256;
  int digits = 20;
  int k_min = 4;
  int k_max = 15;
  int K = 0;
  int k = 0;
  int m = 1;
  EvalMode mode = EvalMode::stable;
  Format format = Format::csv;
  PiMethod method = PiMethod::viete_product;
  std::vector<int> bits;
  std::uint64_t seed = 20170203;
};

// Invalid command lines. exit_code is 2 for usage errors and 0 for --help.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_code = 2)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// argv without the program name.
CliConfig parse_args(const std::vector<std::string>& argv);

struct RunResult {
  int exit_code = 0;
  std::string out;  // data only
  std::string err;  // diagnostics
};

RunResult run(const CliConfig& config);

// parse_args + run, mapping usage errors to exit code 2.
RunResult main_entry(const std::vector<std::string>& argv);

}  // namespace viete::cli
