#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "costas/bounds.hpp"

namespace costas::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kInvalidInput = 2, kBudgetExceeded = 3 };

inline constexpr double kDefaultBudget = 1e10;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurveyRow {
  std::uint64_t q = 0;
  std::string family;  // G, L or Ldelta
  std::optional<double> delta;
  std::size_t family_size = 0;
  std::optional<std::uint32_t> exact;
  double bound = 0.0;
  BoundKind kind = BoundKind::UpperBound;
  std::optional<bool> pass;
  std::string status = "ok";  // ok | skipped_budget | not_applicable
  std::optional<double> wall_time;
};

std::string survey_header();
std::string survey_csv(const SurveyRow& row);
/// (q, family, delta) key as written in the first three CSV columns.
std::string survey_key(std::uint64_t q, const std::string& family, std::optional<double> delta);

/// --budget if given, else COSTAS_LAB_BUDGET, else kDefaultBudget.
double resolve_budget(std::optional<double> flag);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace costas::cli
