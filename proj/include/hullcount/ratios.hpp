#pragma once

// Ratio factors between consecutive hull-dimension counts,
//
//   A_l = alpha * cofactor * A_{l+step},
//
// with cofactor (q^{l+1}-1) for the Euclidean and Hermitian forms (step 1)
// and (q^{l+1}-1)(q^{l+2}-1) for the symplectic form (step 2), together with
// the exception families where the counts stop decreasing in l.

#include "hullcount/algebra.hpp"
#include "hullcount/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hullcount {

enum class Classification {
  StrictlyAboveOne,
  HermitianBoundary,
  SymplecticExceptionES,
  EuclideanHalfBoundRegime,
};

const char* to_string(Classification c) noexcept;

struct RatioReport {
  FormKind::Kind form = FormKind::Kind::Hermitian;
  int step = 1;
  ExactRat alpha;
  ExactInt cofactor;
  ExactRat full_ratio;  // alpha * cofactor = A_l / A_{l+step}
  Classification classification = Classification::StrictlyAboveOne;
  bool monotone_A = false;  // full_ratio > 1
  // Euclidean only: alpha == 1/2 (attained at k = n/2, l = k-1 in the
  // eta = +1 regime).
  bool attains_half_bound = false;
};

// Hermitian, 0 <= l, l+1 <= k <= n-l-1.
ExactRat alpha_hermitian(int n, int k, int hull, std::int64_t q);

// Symplectic over F_q^{ambient}, l+2 <= k <= ambient-l-2 with k-l even.
ExactRat alpha_symplectic(int ambient, int k, int hull, std::int64_t q);

// Euclidean, 1 <= k <= n/2, 0 <= l <= k-1. Four parity cases for each
// characteristic. Throws OutOfValidRange when A_{l+1} = 0 (n even, k-l odd,
// l = n/2-1 and eta((-1)^{n/2}) = -1), where no finite factor exists.
ExactRat alpha_euclidean(int n, int k, int hull, std::int64_t q);

/// eta(x) = x^{(q-1)/2} in F_q: +1 for non-zero squares, -1 for non-squares,
/// 0 for zero. Throws EvenCharacteristic.
int quadratic_character(const FiniteField& field, FieldElem x);
/// Same for the image of an integer residue in F_q (q <= the field limit).
int quadratic_character(std::int64_t residue, std::int64_t q);

/// eta(-1) over F_q without building the field: (-1)^{(q-1)/2}.
int eta_of_minus_one(std::int64_t q);

/// The cofactor (q^{l+1}-1), or (q^{l+1}-1)(q^{l+2}-1) for step 2.
ExactInt ratio_cofactor(int hull, std::int64_t q, int step);

RatioReport hermitian_ratio_report(int n, int k, int hull, std::int64_t q);
RatioReport symplectic_ratio_report(int ambient, int k, int hull, std::int64_t q);
RatioReport euclidean_ratio_report(int n, int k, int hull, std::int64_t q);

/// l = 0 with a, b odd and min(a, b) = 1; equivalently l = 0, n even,
/// k in {1, n-1}.
bool in_hermitian_boundary_family(int n, int k, int hull);

/// (ambient, k, 0, 2) with 4 <= k <= ambient-4, k even.
bool in_symplectic_exception_family(int ambient, int k, int hull, std::int64_t q);

struct HermitianClassification {
  Classification classification;
  bool ratio_monotone;  // alpha (q^{l+1}-1) > 1
  bool count_monotone;  // A_l > A_{l+1}, from the counts directly
};

struct SymplecticClassification {
  Classification classification;
  bool monotone;  // A_l > A_{l+2}, from the counts directly
};

HermitianClassification classify_hermitian(int n, int k, int hull, std::int64_t q);
SymplecticClassification classify_symplectic(int ambient, int k, int hull, std::int64_t q);

enum class Regime { BoundaryFixedA, Joint };

const char* to_string(Regime r) noexcept;

struct AsymptoticReport {
  Regime regime;
  ExactRat limit;  // limit of A_l / A_{l+step}
};

/// Joint: a, b -> infinity. Boundary: `room_above` = a fixed, b -> infinity
/// (requires a >= 1, else BadRegime).
AsymptoticReport asymptotic_hermitian(Regime regime, int hull, std::int64_t q, int room_above = 0);
/// Boundary requires a >= 2 and even.
AsymptoticReport asymptotic_symplectic(Regime regime, int hull, std::int64_t q, int room_above = 0);

struct ComparisonColumn {
  FormKind::Kind form;
  int step;
  std::string alpha_closed_form;
  std::string exceptions;
};

struct ComparisonEntry {
  std::int64_t q;
  // Per column, in the order of ComparisonTable::columns.
  std::vector<std::optional<ExactRat>> alpha_lower_bound;  // nullopt: no bound above 0 stated
  std::vector<ExactRat> alpha_asymptotic;
  std::vector<ExactRat> ratio_asymptotic;  // joint-regime A_0 / A_step
};

struct ComparisonTable {
  std::vector<ComparisonColumn> columns;  // Euclidean, Hermitian, Symplectic
  std::vector<ComparisonEntry> entries;   // one per requested q
};

ComparisonTable comparison_table(const std::vector<std::int64_t>& qs);

}  // namespace hullcount
