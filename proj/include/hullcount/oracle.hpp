#pragma once

// Brute-force ground truth: walk every k-dimensional subspace of F_Q^n once,
// as its unique RREF generator matrix, and tally hull dimensions.

#include "hullcount/algebra.hpp"
#include "hullcount/exactnum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hullcount {

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

/// Upper bound Q^{k(n-k)} * C(n, k) on the number of subspaces yielded.
ExactInt enumeration_work_estimate(int n, int k, int field_order);

/// Throws WorkLimitExceeded if the estimate exceeds `work_limit`.
void check_enumeration_feasible(int n, int k, int field_order, std::uint64_t work_limit);

/// All k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> pivot_subsets(int n, int k);

/// Single-consumer stream of RREF generator matrices.
///
///   SubspaceIterator it(n, k, field);
///   while (it.next()) use(it.current());
class SubspaceIterator {
 public:
  SubspaceIterator(int n, int k, FiniteField field, std::uint64_t work_limit = kDefaultWorkLimit);

  /// Restricts the walk to subspaces whose RREF has exactly these pivot
  /// columns (strictly increasing). Used to partition work across threads.
  static SubspaceIterator for_pivots(int n, FiniteField field, std::vector<int> pivots);

  /// Advances to the next subspace; false once exhausted.
  bool next();
  const MatrixGF& current() const noexcept { return current_; }
  std::uint64_t yielded() const noexcept { return yielded_; }

 private:
  SubspaceIterator(int n, int k, FiniteField field, std::vector<std::vector<int>> pivot_sets);

  void load_pivot_set();
  bool advance_odometer();

  int n_;
  int k_;
  FiniteField field_;
  std::vector<std::vector<int>> pivot_sets_;
  std::size_t pivot_index_ = 0;
  std::vector<std::pair<int, int>> free_cells_;
  std::vector<int> digits_;
  MatrixGF current_;
  bool started_ = false;
  bool exhausted_ = false;
  std::uint64_t yielded_ = 0;
};

struct HullSpectrum {
  int n = 0;
  int k = 0;
  int field_order = 0;
  std::int64_t q = 0;  // subfield order for Hermitian, field order otherwise
  FormKind::Kind form = FormKind::Kind::Euclidean;
  std::map<int, ExactInt> counts;  // hull dimension -> number of codes; only non-zero entries

  ExactInt total() const;
  ExactInt count(int hull) const;

  /// Adds counts from another partition of the same enumeration.
  HullSpectrum& merge(const HullSpectrum& other);
};

struct OracleOptions {
  std::uint64_t work_limit = kDefaultWorkLimit;
  unsigned threads = 1;
};

/// Exact spectrum by enumeration. `form` picks the inner product; for the
/// Hermitian form the field order must be a square.
HullSpectrum hull_spectrum(int n, int k, const FiniteField& field, const FormKind& form,
                           const OracleOptions& options = {});

/// CSV rows "n,k,q,form,l,count" (no header).
void write_spectrum_csv(std::ostream& os, const HullSpectrum& spectrum);
inline constexpr const char* kSpectrumCsvHeader = "n,k,q,form,l,count";

struct SpectrumCell {
  int hull;
  ExactInt oracle;
  std::optional<ExactInt> formula;  // absent for the Euclidean form

  bool matches() const { return !formula || *formula == oracle; }
};

struct SpectrumCheck {
  FormKind::Kind form;
  int n;  // ambient length (2n for the symplectic form)
  int k;
  std::int64_t q;
  std::vector<SpectrumCell> cells;  // every admissible hull dimension
  ExactInt oracle_total;
  ExactInt expected_total;  // Gaussian binomial

  bool sum_ok() const { return oracle_total == expected_total; }
  bool passed() const;
  /// Human-readable list of disagreements; empty when passed().
  std::vector<std::string> diff() const;
};

struct CheckOptions {
  OracleOptions oracle;
  // Test hook: perturbs the closed-form value at l = 0 by +1.
  bool corrupt_formula = false;
};

/// Oracle spectrum against the closed forms. `q` is the base field order: the
/// Hermitian form runs over F_{q^2}, the others over F_q. `n` is the
/// ambient length.
SpectrumCheck spectrum_vs_formula(int n, int k, std::int64_t q, FormKind::Kind form,
                                  const CheckOptions& options = {});

/// The field order the oracle enumerates over for a given form and q.
std::int64_t oracle_field_order(FormKind::Kind form, std::int64_t q);

}  // namespace hullcount
