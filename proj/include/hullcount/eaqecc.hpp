#pragma once

// Entanglement-assisted quantum code parameters induced by hull-graded
// classical codes, and per-entanglement-level counts of those codes.

#include "hullcount/algebra.hpp"
#include "hullcount/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hullcount {

/// [[n, k, d; c]]_q. The distance is carried through, never computed.
struct EaqeccParams {
  int n = 0;
  int k_logical = 0;
  std::optional<int> d;
  int c = 0;  // ebits
  std::int64_t q = 2;

  friend bool operator==(const EaqeccParams&, const EaqeccParams&) = default;
  std::string str() const;
};

/// The two codes from an [n, k]_{q^2} code with Hermitian hull dimension l:
/// [[n, k-l, d; n-k-l]]_q and [[n, n-k-l, d_dual; k-l]]_q.
std::pair<EaqeccParams, EaqeccParams> gjg_map(int n, int k, int hull, std::int64_t q,
                                              std::optional<int> d = std::nullopt,
                                              std::optional<int> d_dual = std::nullopt);

/// [[n, n-(k+l)/2, d; (k-l)/2]]_q from a [2n, k]_q code with symplectic hull l.
EaqeccParams wilde_brun_map(int ambient, int k, int hull, std::int64_t q, std::optional<int> d = std::nullopt);

/// Ebits of the stabilizer code with binary check matrix H = [H_Z | H_X]:
/// rank(H_X H_Z^T + H_Z H_X^T) / 2.
int ebits_from_check_matrix(const MatrixGF& check);

struct CensusRow {
  int hull;
  int ebits;
  ExactInt count;
  bool exception;  // count does not decrease from this hull to the next one
};

/// One row per admissible hull dimension. `length` is n for the Hermitian
/// form and the ambient 2n for the symplectic form. The Euclidean form has no
/// closed count and is rejected with BadRange.
std::vector<CensusRow> entanglement_census(FormKind::Kind form, int length, int k, std::int64_t q);

}  // namespace hullcount
