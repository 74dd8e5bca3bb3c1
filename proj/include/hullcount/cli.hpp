#pragma once

// Command-line front end. Everything is routed through explicit streams so the
// test suites can drive it in-process.

#include "hullcount/algebra.hpp"
#include "hullcount/oracle.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hullcount::cli {

enum class OutputFormat { Markdown, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitPrecondition = 2;

/// Entry point shared by the executable and the tests. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// HULLCOUNT_WORK_LIMIT if set, else `fallback`. Throws BadRange on a value
/// that is not a positive integer.
std::uint64_t work_limit_from_env(std::uint64_t fallback = kDefaultWorkLimit);

// Tables ---------------------------------------------------------------------

enum class TableKind { Hermitian, Symplectic, Comparison };

/// The fixed (n, k, q) grids of the two count tables; n is the ambient length.
struct TableRowSpec {
  int n = 0;
  int k = 0;
  std::int64_t q = 0;
};
const std::vector<TableRowSpec>& hermitian_table_rows();
const std::vector<TableRowSpec>& symplectic_table_rows();

void render_table(TableKind kind, OutputFormat format, std::ostream& out);

// Census ---------------------------------------------------------------------

void render_census(FormKind::Kind form, int length, int k, std::int64_t q, OutputFormat format, std::ostream& out);

// Verification sweeps --------------------------------------------------------

struct SweepConfig {
  std::vector<FormKind::Kind> forms;
  int n_min = 1;  // ambient length; odd values are skipped for the symplectic form
  int n_max = 5;
  std::optional<int> k_min;  // default per form: the full admissible range
  std::optional<int> k_max;
  std::vector<std::int64_t> qs{2};
  std::uint64_t work_limit = kDefaultWorkLimit;
  unsigned threads = 1;
  bool corrupt_formula = false;
};

struct SweepCell {
  FormKind::Kind form = FormKind::Kind::Hermitian;
  int n = 0;
  int k = 0;
  std::int64_t q = 0;
  bool spectrum_ok = true;
  bool ratios_ok = true;
  bool classification_ok = true;
  std::vector<std::string> problems;

  bool passed() const { return spectrum_ok && ratios_ok && classification_ok; }
};

struct SweepResult {
  std::vector<SweepCell> cells;

  bool passed() const;
  const SweepCell* first_failure() const;
};

/// Throws WorkLimitExceeded before doing any work if some grid cell is
/// infeasible, and BadRange on an empty or malformed grid.
SweepResult run_sweep(const SweepConfig& config);

void render_sweep(const SweepResult& result, OutputFormat format, std::ostream& out);

}  // namespace hullcount::cli
