#include "hullcount/eaqecc.hpp"

#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"
#include "hullcount/ratios.hpp"

#include <algorithm>

namespace hullcount {

std::string EaqeccParams::str() const {
  return "[[" + std::to_string(n) + ", " + std::to_string(k_logical) + ", " + (d ? std::to_string(*d) : "d") + "; " +
         std::to_string(c) + "]]_" + std::to_string(q);
}

std::pair<EaqeccParams, EaqeccParams> gjg_map(int n, int k, int hull, std::int64_t q, std::optional<int> d,
                                              std::optional<int> d_dual) {
  if (n < 0 || k < 0 || k > n || hull < 0 || hull > std::min(k, n - k)) {
    throw Error(ErrorKind::BadRange, "need 0 <= l <= min(k, n-k), got n=" + std::to_string(n) +
                                         " k=" + std::to_string(k) + " l=" + std::to_string(hull));
  }
  return {EaqeccParams{n, k - hull, d, n - k - hull, q}, EaqeccParams{n, n - k - hull, d_dual, k - hull, q}};
}

EaqeccParams wilde_brun_map(int ambient, int k, int hull, std::int64_t q, std::optional<int> d) {
  if (ambient < 0 || ambient % 2 != 0) {
    throw Error(ErrorKind::BadRange, "ambient length must be even and non-negative, got " + std::to_string(ambient));
  }
  if (k < 0 || k > ambient || hull < 0 || hull > std::min(k, ambient - k)) {
    throw Error(ErrorKind::BadRange, "need 0 <= l <= min(k, 2n-k), got 2n=" + std::to_string(ambient) +
                                         " k=" + std::to_string(k) + " l=" + std::to_string(hull));
  }
  if ((k - hull) % 2 != 0) throw Error(ErrorKind::ParityViolation, "k - l must be even");
  const int n = ambient / 2;
  return EaqeccParams{n, n - (k + hull) / 2, d, (k - hull) / 2, q};
}

int ebits_from_check_matrix(const MatrixGF& h) {
  const FiniteField& f = h.field();
  if (f.order() != 2) throw Error(ErrorKind::NotBinaryField, "check matrix must be over F_2");
  if (h.cols() % 2 != 0) throw Error(ErrorKind::OddAmbientForSymplectic, "check matrix needs 2n columns");
  const int n = h.cols() / 2;
  const int m = h.rows();
  MatrixGF hz(f, m, n);
  MatrixGF hx(f, m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      hz(r, c) = h(r, c);
      hx(r, c) = h(r, n + c);
    }
  }
  const MatrixGF a = hx * hz.transpose();
  const MatrixGF b = hz * hx.transpose();
  MatrixGF sum(f, m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) sum(i, j) = f.add(a(i, j), b(i, j));
  }
  const int r = rank(sum);
  if (r % 2 != 0) throw Error(ErrorKind::OddGramRank, "symplectic Gram has odd rank " + std::to_string(r));
  return r / 2;
}

std::vector<CensusRow> entanglement_census(FormKind::Kind form, int length, int k, std::int64_t q) {
  if (!prime_power(q)) throw Error(ErrorKind::BadRange, std::to_string(q) + " is not a prime power");
  std::vector<CensusRow> rows;
  switch (form) {
    case FormKind::Kind::Hermitian: {
      const int n = length;
      if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::BadRange, "need 0 <= k <= n");
      for (int l = 0; l <= std::min(k, n - k); ++l) {
        const bool exception = q == 2 && in_hermitian_boundary_family(n, k, l);
        rows.push_back({l, gjg_map(n, k, l, q).first.c, count_hermitian({n, k, l, q}), exception});
      }
      break;
    }
    case FormKind::Kind::Symplectic: {
      if (length < 0 || length % 2 != 0) {
        throw Error(ErrorKind::OddAmbientForSymplectic, "ambient length must be even");
      }
      if (k < 0 || k > length) throw Error(ErrorKind::BadRange, "need 0 <= k <= 2n");
      for (int l = k % 2; l <= std::min(k, length - k); l += 2) {
        rows.push_back({l, wilde_brun_map(length, k, l, q).c, count_symplectic({length / 2, k, l, q}),
                        in_symplectic_exception_family(length, k, l, q)});
      }
      break;
    }
    case FormKind::Kind::Euclidean:
      throw Error(ErrorKind::BadRange, "no closed-form census for the Euclidean form");
  }
  return rows;
}

}  // namespace hullcount
