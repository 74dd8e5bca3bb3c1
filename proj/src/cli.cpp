#include "hullcount/cli.hpp"

#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"
#include "hullcount/oracle.hpp"
#include "hullcount/ratios.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hullcount::cli {
namespace {

const std::vector<std::string> kForms{"hermitian", "symplectic", "euclidean"};
const std::vector<std::string> kFormats{"markdown", "csv", "json"};

FormKind::Kind parse_form(const std::string& s) {
  if (s == "hermitian") return FormKind::Kind::Hermitian;
  if (s == "symplectic") return FormKind::Kind::Symplectic;
  return FormKind::Kind::Euclidean;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return OutputFormat::Markdown;
}

// Symplectic commands take the ambient length 2n, the others take n; refuse
// the wrong one instead of guessing.
int resolve_length(FormKind::Kind form, const std::optional<int>& n, const std::optional<int>& ambient) {
  if (form == FormKind::Kind::Symplectic) {
    if (n) throw Error(ErrorKind::BadRange, "the symplectic form takes --ambient 2n, not -n");
    if (!ambient) throw Error(ErrorKind::BadRange, "--ambient is required for the symplectic form");
    if (*ambient < 0 || *ambient % 2 != 0) {
      throw Error(ErrorKind::OddAmbientForSymplectic, "--ambient must be even, got " + std::to_string(*ambient));
    }
    return *ambient;
  }
  if (ambient) throw Error(ErrorKind::BadRange, "--ambient applies only to the symplectic form; use -n");
  if (!n) throw Error(ErrorKind::BadRange, "-n is required");
  if (*n < 0) throw Error(ErrorKind::BadRange, "-n must be non-negative");
  return *n;
}

void require_prime_power(std::int64_t q) {
  if (!prime_power(q)) throw Error(ErrorKind::NonPrime, "q = " + std::to_string(q) + " is not a prime power");
}

struct EvalArgs {
  std::string form;
  std::optional<int> n;
  std::optional<int> ambient;
  int k = 0;
  int l = 0;
  std::int64_t q = 2;
  bool uncorrected = false;
  std::optional<std::uint64_t> work_limit;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const FormKind::Kind form = parse_form(a.form);
  const int n = resolve_length(form, a.n, a.ambient);
  require_prime_power(a.q);
  if (a.k < 0 || a.k > n) throw Error(ErrorKind::BadRange, "need 0 <= k <= length");
  if (a.l < 0) throw Error(ErrorKind::BadRange, "hull dimension must be non-negative");

  ExactInt count;
  std::optional<RatioReport> report;
  std::string undefined_reason;
  auto try_report = [&](const std::function<RatioReport()>& f) {
    try {
      report = f();
    } catch (const Error& e) {
      undefined_reason = e.what();
    }
  };

  switch (form) {
    case FormKind::Kind::Hermitian:
      count = count_hermitian({n, a.k, a.l, a.q});
      try_report([&] { return hermitian_ratio_report(n, a.k, a.l, a.q); });
      break;
    case FormKind::Kind::Symplectic:
      count = count_symplectic({n / 2, a.k, a.l, a.q});
      try_report([&] { return symplectic_ratio_report(n, a.k, a.l, a.q); });
      break;
    case FormKind::Kind::Euclidean: {
      if (a.q > kDefaultMaxFieldOrder) throw Error(ErrorKind::DegreeTooLarge, "q exceeds the field size limit");
      const FiniteField field = make_field_of_order(static_cast<int>(a.q));
      OracleOptions options;
      options.work_limit = a.work_limit.value_or(work_limit_from_env());
      count = hull_spectrum(n, a.k, field, FormKind::euclidean(), options).count(a.l);
      try_report([&] { return euclidean_ratio_report(n, a.k, a.l, a.q); });
      break;
    }
  }

  out << "form: " << a.form << '\n';
  out << (form == FormKind::Kind::Symplectic ? "ambient: " : "n: ") << n << '\n';
  out << "k: " << a.k << "\nl: " << a.l << "\nq: " << a.q << '\n';
  out << "count: " << count.str() << (form == FormKind::Kind::Euclidean ? " (oracle)" : "") << '\n';
  if (report) {
    out << "alpha: " << report->alpha.str() << '\n';
    out << "cofactor: " << report->cofactor.str() << '\n';
    out << "ratio A_l/A_{l+" << report->step << "}: " << report->full_ratio.str() << '\n';
    out << "classification: " << to_string(report->classification) << '\n';
  } else {
    out << "alpha: undefined (" << undefined_reason << ")\n";
    out << "classification: none\n";
  }
  if (a.uncorrected) {
    if (form != FormKind::Kind::Symplectic) throw Error(ErrorKind::BadRange, "--uncorrected is symplectic only");
    out << "uncorrected product: " << count_symplectic_uncorrected({n / 2, a.k, a.l, a.q}).str() << '\n';
  }
  return kExitOk;
}

struct CensusArgs {
  std::string form;
  std::optional<int> n;
  std::optional<int> ambient;
  int k = 0;
  std::int64_t q = 2;
  std::string format = "markdown";
};

struct VerifyArgs {
  std::vector<std::string> forms;
  int n_min = 1;
  int n_max = 5;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::vector<std::int64_t> qs{2};
  std::optional<std::uint64_t> work_limit;
  unsigned threads = 1;
  std::string format = "markdown";
  std::string output;
  bool corrupt = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  for (const auto& f : a.forms.empty() ? kForms : a.forms) config.forms.push_back(parse_form(f));
  config.n_min = a.n_min;
  config.n_max = a.n_max;
  config.k_min = a.k_min;
  config.k_max = a.k_max;
  config.qs = a.qs;
  config.work_limit = a.work_limit.value_or(work_limit_from_env());
  config.threads = a.threads;
  config.corrupt_formula = a.corrupt;

  const SweepResult result = run_sweep(config);
  if (a.output.empty()) {
    render_sweep(result, parse_format(a.format), out);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorKind::BadRange, "cannot open " + a.output);
    render_sweep(result, parse_format(a.format), file);
  }
  if (const SweepCell* bad = result.first_failure()) {
    err << "mismatch at " << to_string(bad->form) << " n=" << bad->n << " k=" << bad->k << " q=" << bad->q;
    if (!bad->problems.empty()) err << ": " << bad->problems.front();
    err << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

void add_length_options(CLI::App* cmd, std::optional<int>& n, std::optional<int>& ambient) {
  cmd->add_option("-n,--length", n, "Code length n (hermitian, euclidean)");
  cmd->add_option("--ambient", ambient, "Ambient length 2n (symplectic)");
}

}  // namespace

std::uint64_t work_limit_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("HULLCOUNT_WORK_LIMIT");
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
    throw Error(ErrorKind::BadRange, "HULLCOUNT_WORK_LIMIT must be a positive integer, got '" + text + "'");
  }
  const std::uint64_t value = std::stoull(text);
  if (value == 0) throw Error(ErrorKind::BadRange, "HULLCOUNT_WORK_LIMIT must be positive");
  return value;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of linear codes by hull dimension, with brute-force verification.", "hullcount"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Count, ratio factor and classification at one parameter point");
  eval->add_option("--form", eval_args.form)->required()->check(CLI::IsMember(kForms));
  add_length_options(eval, eval_args.n, eval_args.ambient);
  eval->add_option("-k", eval_args.k, "Code dimension")->required();
  eval->add_option("-l,--hull", eval_args.l, "Hull dimension")->required();
  eval->add_option("-q", eval_args.q, "Field parameter q (Hermitian codes live over F_{q^2})")->required();
  eval->add_option("--work-limit", eval_args.work_limit, "Oracle work limit (euclidean)");
  eval->add_flag("--uncorrected", eval_args.uncorrected, "Also print the uncorrected symplectic product");

  std::string table_which;
  std::string table_format = "markdown";
  auto* table = app.add_subcommand("table", "Render the count tables or the form comparison");
  table->add_option("which", table_which)->required()->check(CLI::IsMember({"hermitian", "symplectic", "comparison"}));
  table->add_option("--format", table_format)->check(CLI::IsMember(kFormats));

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Code counts graded by entanglement");
  census->add_option("--form", census_args.form)->required()->check(CLI::IsMember({"hermitian", "symplectic"}));
  add_length_options(census, census_args.n, census_args.ambient);
  census->add_option("-k", census_args.k, "Code dimension")->required();
  census->add_option("-q", census_args.q, "Field parameter q")->required();
  census->add_option("--format", census_args.format)->check(CLI::IsMember(kFormats));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check closed forms against exhaustive enumeration");
  verify->add_option("--form", verify_args.forms, "Forms to sweep (default: all)")->check(CLI::IsMember(kForms));
  verify->add_option("--n-min", verify_args.n_min, "Smallest ambient length");
  verify->add_option("--n-max", verify_args.n_max, "Largest ambient length");
  verify->add_option("--k-min", verify_args.k_min);
  verify->add_option("--k-max", verify_args.k_max);
  verify->add_option("-q", verify_args.qs, "Values of q")->delimiter(',');
  verify->add_option("--work-limit", verify_args.work_limit, "Largest enumeration allowed per cell")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", verify_args.threads, "Worker threads per cell")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember(kFormats));
  verify->add_option("-o,--output", verify_args.output, "Write the report here instead of stdout");
  verify->add_flag("--corrupt-formula", verify_args.corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*eval) return cmd_eval(eval_args, out);
    if (*table) {
      const TableKind kind = table_which == "hermitian"    ? TableKind::Hermitian
                             : table_which == "symplectic" ? TableKind::Symplectic
                                                           : TableKind::Comparison;
      render_table(kind, parse_format(table_format), out);
      return kExitOk;
    }
    if (*census) {
      const FormKind::Kind form = parse_form(census_args.form);
      const int length = resolve_length(form, census_args.n, census_args.ambient);
      require_prime_power(census_args.q);
      render_census(form, length, census_args.k, census_args.q, parse_format(census_args.format), out);
      return kExitOk;
    }
    if (*verify) return cmd_verify(verify_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitPrecondition;
}

}  // namespace hullcount::cli
