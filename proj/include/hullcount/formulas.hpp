#pragma once

// Closed-form counts of linear codes by hull dimension.
//
// All evaluators take concrete integers and work for any prime power q; they
// never build the field. Parameter combinations outside the range where such
// codes can exist produce a count of 0 so that callers can sum over the hull
// dimension without guarding each term.

#include "hullcount/exactnum.hpp"

#include <cstdint>

namespace hullcount {

/// [n, k]_{q^2} code with Hermitian hull dimension `hull`.
struct HermitianParams {
  int n = 0;
  int k = 0;
  int hull = 0;
  std::int64_t q = 2;  // subfield order; codes live over F_{q^2}

  int lcd_dim() const noexcept { return k - hull; }         // k0
  int codim_of_lcd() const noexcept { return n - lcd_dim(); }  // s
  int sign() const noexcept { return codim_of_lcd() % 2 == 0 ? -1 : 1; }  // (-1)^(s+1)
  int room_above() const noexcept { return k - hull; }       // a
  int room_below() const noexcept { return n - k - hull; }   // b
  bool in_range() const noexcept {
    return n >= 0 && k >= 0 && k <= n && hull >= 0 && hull <= k && hull <= n - k;
  }
};

/// [2n, k]_q code with symplectic hull dimension `hull`; `half_length` is n.
struct SymplecticParams {
  int half_length = 0;
  int k = 0;
  int hull = 0;
  std::int64_t q = 2;

  int ambient() const noexcept { return 2 * half_length; }
  bool parity_ok() const noexcept { return (k - hull) % 2 == 0; }
  int lcd_half_dim() const noexcept { return (k - hull) / 2; }   // k0
  int room_above() const noexcept { return k - hull; }           // a
  int room_below() const noexcept { return ambient() - k - hull; }  // b
  bool in_range() const noexcept {
    return half_length >= 0 && k >= 0 && k <= ambient() && hull >= 0 && hull <= k &&
           hull <= ambient() - k;
  }
};

/// Number of Hermitian LCD [n, k0]_{q^2} codes. Throws BadRange unless 0 <= k0 <= n.
ExactInt hermitian_lcd_count(int n, int k0, std::int64_t q);

/// Factor F_i of the sign-unified Hermitian product, 1 <= i <= hull.
/// Throws BadIndex for i outside that range and BadRange for params outside
/// the valid hull range.
ExactRat unified_factor(int i, const HermitianParams& params);

/// The two parity branches of the Hermitian product factor, kept separate from
/// unified_factor so the sign unification can be checked against them.
ExactRat hermitian_factor_odd_branch(int n, int k0, int i, std::int64_t q);
ExactRat hermitian_factor_even_branch(int n, int k0, int i, std::int64_t q);

/// Number of [n, k]_{q^2} codes with Hermitian hull dimension `hull`.
ExactInt count_hermitian(const HermitianParams& params);

/// Number of [2n, k]_q codes with symplectic hull dimension `hull`.
ExactInt count_symplectic(const SymplecticParams& params);

/// Number of symplectic LCD [2n, 2k0]_q codes. Throws BadRange unless 0 <= k0 <= n.
ExactInt symplectic_lcd_count(int half_length, int k0, std::int64_t q);

/// The symplectic product with index-independent exponents, as it circulated
/// before correction. It is not a count: at (2n, k, hull, q) = (4, 2, 2, 2) it
/// evaluates to 7/3. Only for demonstrating that failure; never use for counting.
ExactRat count_symplectic_uncorrected(const SymplecticParams& params);

}  // namespace hullcount
