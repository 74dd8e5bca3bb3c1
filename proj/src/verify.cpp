#include "format.hpp"
#include "hullcount/cli.hpp"
#include "hullcount/error.hpp"
#include "hullcount/ratios.hpp"

#include <algorithm>
#include <string>

namespace hullcount::cli {
namespace {

using detail::bool_str;
using nlohmann::ordered_json;

struct KRange {
  int lo;
  int hi;
};

KRange k_range(const SweepConfig& c, int n) {
  return {std::max(0, c.k_min.value_or(0)), std::min(n, c.k_max.value_or(n))};
}

bool applies(FormKind::Kind form, int n) { return form != FormKind::Kind::Symplectic || n % 2 == 0; }

std::string at(int l) { return "l=" + std::to_string(l) + ": "; }

// A_l = alpha * cofactor * A_{l+step} on the oracle counts, plus agreement of
// the monotonicity classification with the oracle's own ordering.
void check_ratios(SweepCell& cell, const SpectrumCheck& check) {
  auto A = [&](int l) {
    for (const auto& c : check.cells) {
      if (c.hull == l) return c.oracle;
    }
    return ExactInt(0);
  };
  const int n = cell.n;
  const int k = cell.k;
  const std::int64_t q = cell.q;

  switch (cell.form) {
    case FormKind::Kind::Hermitian:
      for (int l = 0; l + 1 <= k && k <= n - l - 1; ++l) {
        const RatioReport r = hermitian_ratio_report(n, k, l, q);
        if (A(l) != r.full_ratio * A(l + 1)) {
          cell.ratios_ok = false;
          cell.problems.push_back(at(l) + "A_l = " + A(l).str() + " but alpha*cofactor*A_{l+1} = " +
                                  (r.full_ratio * A(l + 1)).str());
        }
        const bool monotone = A(l) > A(l + 1);
        const bool expected = !(q == 2 && in_hermitian_boundary_family(n, k, l));
        if (monotone != r.monotone_A || monotone != expected) {
          cell.classification_ok = false;
          cell.problems.push_back(at(l) + "A_l > A_{l+1} is " + bool_str(monotone) + ", classification says " +
                                  to_string(r.classification));
        }
      }
      break;
    case FormKind::Kind::Symplectic:
      for (int l = k % 2; l + 2 <= k && k <= n - l - 2; l += 2) {
        const RatioReport r = symplectic_ratio_report(n, k, l, q);
        if (A(l) != r.full_ratio * A(l + 2)) {
          cell.ratios_ok = false;
          cell.problems.push_back(at(l) + "A_l = " + A(l).str() + " but alpha*cofactor*A_{l+2} = " +
                                  (r.full_ratio * A(l + 2)).str());
        }
        const bool monotone = A(l) > A(l + 2);
        const bool exceptional = r.classification == Classification::SymplecticExceptionES;
        if (monotone == exceptional) {
          cell.classification_ok = false;
          cell.problems.push_back(at(l) + "A_l > A_{l+2} is " + bool_str(monotone) + ", classification says " +
                                  to_string(r.classification));
        }
      }
      break;
    case FormKind::Kind::Euclidean:
      if (k < 1 || 2 * k > n) break;
      for (int l = 0; l <= k - 1; ++l) {
        RatioReport r;
        try {
          r = euclidean_ratio_report(n, k, l, q);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::OutOfValidRange) throw;
          if (A(l + 1) != 0) {
            cell.ratios_ok = false;
            cell.problems.push_back(at(l) + "no ratio defined but A_{l+1} = " + A(l + 1).str());
          }
          continue;
        }
        if (A(l) != r.full_ratio * A(l + 1)) {
          cell.ratios_ok = false;
          cell.problems.push_back(at(l) + "A_l = " + A(l).str() + " but alpha*cofactor*A_{l+1} = " +
                                  (r.full_ratio * A(l + 1)).str());
        }
        if ((A(l) > A(l + 1)) != r.monotone_A) {
          cell.classification_ok = false;
          cell.problems.push_back(at(l) + "monotonicity disagrees with alpha*cofactor = " + r.full_ratio.str());
        }
      }
      break;
  }
}

}  // namespace

bool SweepResult::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.passed(); });
}

const SweepCell* SweepResult::first_failure() const {
  const auto it = std::find_if(cells.begin(), cells.end(), [](const SweepCell& c) { return !c.passed(); });
  return it == cells.end() ? nullptr : &*it;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.forms.empty() || config.qs.empty()) throw Error(ErrorKind::BadRange, "sweep needs a form and a q");
  if (config.n_min < 1 || config.n_max < config.n_min) {
    throw Error(ErrorKind::BadRange, "empty length range " + std::to_string(config.n_min) + ".." +
                                         std::to_string(config.n_max));
  }
  if (config.work_limit == 0) throw Error(ErrorKind::BadRange, "work limit must be positive");

  // Reject the whole sweep up front rather than failing halfway through.
  bool any = false;
  for (auto form : config.forms) {
    for (auto q : config.qs) {
      if (!prime_power(q)) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
      const std::int64_t order = oracle_field_order(form, q);
      if (order > kDefaultMaxFieldOrder) {
        throw Error(ErrorKind::DegreeTooLarge, "oracle field order " + std::to_string(order) + " exceeds the limit");
      }
      for (int n = config.n_min; n <= config.n_max; ++n) {
        if (!applies(form, n)) continue;
        const KRange ks = k_range(config, n);
        for (int k = ks.lo; k <= ks.hi; ++k) {
          check_enumeration_feasible(n, k, static_cast<int>(order), config.work_limit);
          any = true;
        }
      }
    }
  }
  if (!any) throw Error(ErrorKind::BadRange, "sweep grid is empty");

  SweepResult result;
  CheckOptions options;
  options.oracle = {config.work_limit, config.threads};
  options.corrupt_formula = config.corrupt_formula;
  for (auto form : config.forms) {
    for (auto q : config.qs) {
      for (int n = config.n_min; n <= config.n_max; ++n) {
        if (!applies(form, n)) continue;
        const KRange ks = k_range(config, n);
        for (int k = ks.lo; k <= ks.hi; ++k) {
          const SpectrumCheck check = spectrum_vs_formula(n, k, q, form, options);
          SweepCell cell;
          cell.form = form;
          cell.n = n;
          cell.k = k;
          cell.q = q;
          cell.spectrum_ok = check.passed();
          cell.problems = check.diff();
          check_ratios(cell, check);
          result.cells.push_back(std::move(cell));
        }
      }
    }
  }
  return result;
}

void render_sweep(const SweepResult& result, OutputFormat format, std::ostream& out) {
  const auto status = [](bool ok) { return ok ? "pass" : "FAIL"; };
  switch (format) {
    case OutputFormat::Markdown: {
      out << "| form | n | k | q | spectrum | ratios | classification |\n|---|---:|---:|---:|---|---|---|\n";
      std::size_t failed = 0;
      for (const auto& c : result.cells) {
        out << "| " << to_string(c.form) << " | " << c.n << " | " << c.k << " | " << c.q << " | "
            << status(c.spectrum_ok) << " | " << status(c.ratios_ok) << " | " << status(c.classification_ok)
            << " |\n";
        if (!c.passed()) ++failed;
      }
      out << '\n' << result.cells.size() << " cells checked, " << failed << " failed\n";
      break;
    }
    case OutputFormat::Csv:
      out << "form,n,k,q,spectrum_ok,ratios_ok,classification_ok,passed\n";
      for (const auto& c : result.cells) {
        out << to_string(c.form) << ',' << c.n << ',' << c.k << ',' << c.q << ',' << bool_str(c.spectrum_ok) << ','
            << bool_str(c.ratios_ok) << ',' << bool_str(c.classification_ok) << ',' << bool_str(c.passed())
            << '\n';
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& c : result.cells) {
        doc.push_back({{"form", to_string(c.form)},
                       {"n", c.n},
                       {"k", c.k},
                       {"q", c.q},
                       {"spectrum_ok", c.spectrum_ok},
                       {"ratios_ok", c.ratios_ok},
                       {"classification_ok", c.classification_ok},
                       {"passed", c.passed()},
                       {"problems", c.problems}});
      }
      detail::write_json(out, doc);
      break;
    }
  }
}

}  // namespace hullcount::cli
