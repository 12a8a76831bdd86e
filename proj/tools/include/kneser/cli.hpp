#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kneser/solver.hpp"

namespace kneser::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,  // also: certificate invalid
  kInputError = 2,
  kBudgetLimited = 3,
};

// Solver entry point used by `solve` and `reproduce`; tests swap in a faulty one.
using KneserSolver = std::function<SolveResult(int n, int k, int d, const SearchBudget&)>;

KneserSolver default_solver();

// "600s", "1500ms", "10m", "2h"; a bare number means seconds.
std::chrono::milliseconds parse_duration(const std::string& text);

enum class RowStatus { match, mismatch, skipped_budget };

std::string to_string(RowStatus s);

struct ReproRow {
  std::string group;     // filter key for --rows
  std::string instance;  // e.g. "K(8,3)"
  std::string quantity;  // what is being compared
  std::string claim;     // the published statement the row checks
  std::string claimed;
  std::string computed;
  std::string method;    // exact solve / bound closure / oracle / exhaustive
  RowStatus status = RowStatus::mismatch;
  bool mandatory = true;
};

struct ReproOptions {
  std::vector<std::string> groups;  // empty = all
  SearchBudget budget;
  // Budget for rows that are allowed to end as skipped-budget when no
  // explicit --max-time is given.
  std::chrono::milliseconds stretch_time{std::chrono::minutes(10)};
  std::uint64_t seed = 1;
};

// Known --rows groups, in output order.
const std::vector<std::string>& repro_groups();

std::vector<ReproRow> reproduce(const ReproOptions& options, const KneserSolver& solver);

// Exit code for a finished table: mismatch beats a budget-limited mandatory row.
int repro_exit_code(const std::vector<ReproRow>& rows);

// Entry point behind the `kneser` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const KneserSolver& solver = default_solver());

}  // namespace kneser::cli
