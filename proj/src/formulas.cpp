#include "hullcount/formulas.hpp"

#include "hullcount/error.hpp"

#include <stdexcept>
#include <string>

namespace hullcount {
namespace {

ExactInt qpow(std::int64_t q, int e) { return ipow(ExactInt(q), e); }

int minus_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

void require_order(std::int64_t q) {
  if (q < 2) throw Error(ErrorKind::BadRange, "q must be at least 2, got " + std::to_string(q));
}

ExactInt to_count(const ExactRat& value, const char* what) {
  if (!value.is_integer() || value.sign() < 0) {
    throw std::logic_error(std::string(what) + " produced non-integral value " + value.str());
  }
  return value.num();
}

}  // namespace

ExactInt hermitian_lcd_count(int n, int k0, std::int64_t q) {
  require_order(q);
  if (k0 < 0 || k0 > n) {
    throw Error(ErrorKind::BadRange, "need 0 <= k0 <= n, got n=" + std::to_string(n) + " k0=" + std::to_string(k0));
  }
  const int s = n - k0;
  ExactInt num = qpow(q, k0 * s);
  ExactInt den = 1;
  for (int j = 1; j <= k0; ++j) {
    num *= qpow(q, s + j) - minus_one_pow(s + j);
    den *= qpow(q, j) - minus_one_pow(j);
  }
  return to_count(ExactRat(num, den), "hermitian_lcd_count");
}

ExactRat hermitian_factor_odd_branch(int n, int k0, int i, std::int64_t q) {
  const int s = n - k0;
  return ExactRat((qpow(q, s - 2 * i + 2) + 1) * (qpow(q, s - 2 * i + 1) - 1),
                  qpow(q, 2 * k0) * (qpow(q, 2 * i) - 1));
}

ExactRat hermitian_factor_even_branch(int n, int k0, int i, std::int64_t q) {
  const int s = n - k0;
  return ExactRat((qpow(q, s - 2 * i + 2) - 1) * (qpow(q, s - 2 * i + 1) + 1),
                  qpow(q, 2 * k0) * (qpow(q, 2 * i) - 1));
}

ExactRat unified_factor(int i, const HermitianParams& params) {
  require_order(params.q);
  if (!params.in_range()) {
    throw Error(ErrorKind::BadRange, "hull dimension " + std::to_string(params.hull) + " invalid for [" +
                                         std::to_string(params.n) + ", " + std::to_string(params.k) + "]");
  }
  if (i < 1 || i > params.hull) {
    throw Error(ErrorKind::BadIndex, "factor index " + std::to_string(i) + " outside 1.." + std::to_string(params.hull));
  }
  const int s = params.codim_of_lcd();
  const int eps = params.sign();
  return ExactRat((qpow(params.q, s - 2 * i + 2) + eps) * (qpow(params.q, s - 2 * i + 1) - eps),
                  qpow(params.q, 2 * params.lcd_dim()) * (qpow(params.q, 2 * i) - 1));
}

ExactInt count_hermitian(const HermitianParams& params) {
  require_order(params.q);
  if (!params.in_range()) return 0;
  ExactRat value = hermitian_lcd_count(params.n, params.lcd_dim(), params.q);
  for (int i = 1; i <= params.hull; ++i) value *= unified_factor(i, params);
  return to_count(value, "count_hermitian");
}

ExactInt count_symplectic(const SymplecticParams& params) {
  require_order(params.q);
  if (!params.in_range() || !params.parity_ok()) return 0;
  const std::int64_t q = params.q;
  const int n = params.half_length;
  const int k0 = params.lcd_half_dim();
  const int l = params.hull;
  ExactInt num = qpow(q, 2 * k0 * (n - k0 - l)) * gaussian_binomial(n, k0, q * q);
  ExactInt den = 1;
  for (int m = 1; m <= l; ++m) {
    num *= qpow(q, 2 * (n - k0 - l + m)) - 1;
    den *= qpow(q, m) - 1;
  }
  return to_count(ExactRat(num, den), "count_symplectic");
}

ExactInt symplectic_lcd_count(int half_length, int k0, std::int64_t q) {
  require_order(q);
  if (k0 < 0 || k0 > half_length) {
    throw Error(ErrorKind::BadRange, "need 0 <= k0 <= n, got n=" + std::to_string(half_length) +
                                         " k0=" + std::to_string(k0));
  }
  return qpow(q, 2 * k0 * (half_length - k0)) * gaussian_binomial(half_length, k0, q * q);
}

ExactRat count_symplectic_uncorrected(const SymplecticParams& params) {
  require_order(params.q);
  if (!params.in_range() || !params.parity_ok()) return 0;
  const std::int64_t q = params.q;
  const int n = params.half_length;
  const int k0 = params.lcd_half_dim();
  const int l = params.hull;
  ExactRat value = symplectic_lcd_count(n, k0, q);
  if (l > 0) {
    // A single factor pinned at the top index instead of a running product.
    value *= ExactRat(qpow(q, 2 * n - 2 * k0 - l + 1) - 1, qpow(q, 2 * k0 + l) - qpow(q, 2 * k0));
  }
  return value;
}

}  // namespace hullcount
