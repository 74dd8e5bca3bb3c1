#include "hullcount/ratios.hpp"

#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace hullcount {
namespace {

ExactInt qpow(std::int64_t q, int e) { return ipow(ExactInt(q), e); }

int minus_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

std::string params_str(int n, int k, int l, std::int64_t q) {
  return "(" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(l) + ", " + std::to_string(q) + ")";
}

void require_prime_power(std::int64_t q) {
  if (!prime_power(q)) throw Error(ErrorKind::BadRange, std::to_string(q) + " is not a prime power");
}

}  // namespace

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::StrictlyAboveOne: return "StrictlyAboveOne";
    case Classification::HermitianBoundary: return "HermitianBoundary";
    case Classification::SymplecticExceptionES: return "SymplecticExceptionES";
    case Classification::EuclideanHalfBoundRegime: return "EuclideanHalfBoundRegime";
  }
  return "Unknown";
}

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::BoundaryFixedA: return "boundary";
    case Regime::Joint: return "joint";
  }
  return "unknown";
}

ExactInt ratio_cofactor(int hull, std::int64_t q, int step) {
  ExactInt c = qpow(q, hull + 1) - 1;
  if (step == 2) c *= qpow(q, hull + 2) - 1;
  return c;
}

ExactRat alpha_hermitian(int n, int k, int hull, std::int64_t q) {
  require_prime_power(q);
  if (hull < 0 || k < hull + 1 || k > n - hull - 1) {
    throw Error(ErrorKind::OutOfValidRange, "Hermitian ratio needs l+1 <= k <= n-l-1, got " + params_str(n, k, hull, q));
  }
  const int a = k - hull;
  const int b = n - k - hull;
  return ExactRat(qpow(q, n - 2 * hull - 1) * (qpow(q, hull + 1) + 1),
                  (qpow(q, a) - minus_one_pow(a)) * (qpow(q, b) - minus_one_pow(b)));
}

ExactRat alpha_symplectic(int ambient, int k, int hull, std::int64_t q) {
  require_prime_power(q);
  if (ambient % 2 != 0) throw Error(ErrorKind::OddAmbientForSymplectic, "ambient length must be even");
  if ((k - hull) % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "k - l must be even, got " + params_str(ambient, k, hull, q));
  }
  if (hull < 0 || k < hull + 2 || k > ambient - hull - 2) {
    throw Error(ErrorKind::OutOfValidRange,
                "symplectic ratio needs l+2 <= k <= 2n-l-2, got " + params_str(ambient, k, hull, q));
  }
  const int a = k - hull;
  const int b = ambient - k - hull;
  return ExactRat(qpow(q, a + b - 2), (qpow(q, a) - 1) * (qpow(q, b) - 1));
}

int eta_of_minus_one(std::int64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenCharacteristic, "quadratic character needs odd q");
  return ((q - 1) / 2) % 2 == 0 ? 1 : -1;
}

ExactRat alpha_euclidean(int n, int k, int hull, std::int64_t q) {
  require_prime_power(q);
  if (k < 1 || 2 * k > n || hull < 0 || hull > k - 1) {
    throw Error(ErrorKind::OutOfValidRange,
                "Euclidean ratio needs 1 <= k <= n/2 and 0 <= l <= k-1, got " + params_str(n, k, hull, q));
  }
  const int l = hull;
  const bool n_even = n % 2 == 0;
  const bool d_odd = (k - l) % 2 != 0;

  if (!n_even && d_odd) return ExactRat(qpow(q, n - k - l), qpow(q, n - k - l) - 1);
  if (!n_even && !d_odd) return ExactRat(qpow(q, k - l), qpow(q, k - l) - 1);

  if (q % 2 == 0) {
    if (d_odd) return ExactRat(qpow(q, n - l - 1), qpow(q, n - l - 1) - 1);
    return ExactRat(qpow(q, n - l) - 1, qpow(q, l) * (qpow(q, n - k - l) - 1) * (qpow(q, k - l) - 1));
  }

  const int half = n / 2;
  const int eta = half % 2 == 0 ? 1 : eta_of_minus_one(q);  // eta((-1)^{n/2})
  if (d_odd) {
    const ExactInt den = qpow(q, half - 1) + eta * qpow(q, l);
    if (den == 0) {
      throw Error(ErrorKind::OutOfValidRange,
                  "no self-orthogonal codes of dimension l+1 exist at " + params_str(n, k, hull, q));
    }
    return ExactRat(qpow(q, half - 1), den);
  }
  return ExactRat(qpow(q, half - l) * (qpow(q, half - l) + eta), (qpow(q, n - k - l) - 1) * (qpow(q, k - l) - 1));
}

int quadratic_character(const FiniteField& field, FieldElem x) {
  if (field.characteristic() == 2) throw Error(ErrorKind::EvenCharacteristic, "quadratic character needs odd q");
  if (x == field.zero()) return 0;
  const FieldElem r = field.pow(x, static_cast<std::uint64_t>((field.order() - 1) / 2));
  if (r == field.one()) return 1;
  assert(r == field.neg(field.one()));
  return -1;
}

int quadratic_character(std::int64_t residue, std::int64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenCharacteristic, "quadratic character needs odd q");
  const FiniteField field = make_field_of_order(static_cast<int>(q));
  return quadratic_character(field, field.from_integer(residue));
}

bool in_hermitian_boundary_family(int n, int k, int hull) {
  const int a = k - hull;
  const int b = n - k - hull;
  const bool by_ab = hull == 0 && a % 2 != 0 && b % 2 != 0 && std::min(a, b) == 1;
  [[maybe_unused]] const bool by_nk = hull == 0 && n % 2 == 0 && (k == 1 || k == n - 1);
  assert(by_ab == by_nk);
  return by_ab;
}

bool in_symplectic_exception_family(int ambient, int k, int hull, std::int64_t q) {
  return q == 2 && hull == 0 && k % 2 == 0 && k >= 4 && k <= ambient - 4;
}

RatioReport hermitian_ratio_report(int n, int k, int hull, std::int64_t q) {
  RatioReport r;
  r.form = FormKind::Kind::Hermitian;
  r.step = 1;
  r.alpha = alpha_hermitian(n, k, hull, q);
  r.cofactor = ratio_cofactor(hull, q, 1);
  r.full_ratio = r.alpha * r.cofactor;
  r.classification = in_hermitian_boundary_family(n, k, hull) ? Classification::HermitianBoundary
                                                              : Classification::StrictlyAboveOne;
  r.monotone_A = r.full_ratio > 1;
  return r;
}

RatioReport symplectic_ratio_report(int ambient, int k, int hull, std::int64_t q) {
  RatioReport r;
  r.form = FormKind::Kind::Symplectic;
  r.step = 2;
  r.alpha = alpha_symplectic(ambient, k, hull, q);
  r.cofactor = ratio_cofactor(hull, q, 2);
  r.full_ratio = r.alpha * r.cofactor;
  // alpha itself is below 1 almost everywhere; the classification tracks A_l / A_{l+2}.
  r.classification = in_symplectic_exception_family(ambient, k, hull, q) ? Classification::SymplecticExceptionES
                                                                         : Classification::StrictlyAboveOne;
  r.monotone_A = r.full_ratio > 1;
  return r;
}

RatioReport euclidean_ratio_report(int n, int k, int hull, std::int64_t q) {
  RatioReport r;
  r.form = FormKind::Kind::Euclidean;
  r.step = 1;
  r.alpha = alpha_euclidean(n, k, hull, q);
  r.cofactor = ratio_cofactor(hull, q, 1);
  r.full_ratio = r.alpha * r.cofactor;
  r.classification = r.alpha > 1 ? Classification::StrictlyAboveOne : Classification::EuclideanHalfBoundRegime;
  r.monotone_A = r.full_ratio > 1;
  r.attains_half_bound = r.alpha == ExactRat(1, 2);
  return r;
}

HermitianClassification classify_hermitian(int n, int k, int hull, std::int64_t q) {
  const RatioReport report = hermitian_ratio_report(n, k, hull, q);
  const ExactInt here = count_hermitian({n, k, hull, q});
  const ExactInt next = count_hermitian({n, k, hull + 1, q});
  return HermitianClassification{report.classification, report.full_ratio > 1, here > next};
}

SymplecticClassification classify_symplectic(int ambient, int k, int hull, std::int64_t q) {
  const RatioReport report = symplectic_ratio_report(ambient, k, hull, q);
  const ExactInt here = count_symplectic({ambient / 2, k, hull, q});
  const ExactInt next = count_symplectic({ambient / 2, k, hull + 2, q});
  return SymplecticClassification{report.classification, here > next};
}

AsymptoticReport asymptotic_hermitian(Regime regime, int hull, std::int64_t q, int room_above) {
  require_prime_power(q);
  if (hull < 0) throw Error(ErrorKind::BadRange, "hull dimension must be non-negative");
  const ExactInt up = qpow(q, hull + 1);
  if (regime == Regime::Joint) return {regime, ExactRat(qpow(q, 2 * (hull + 1)) - 1, q)};
  if (room_above < 1) throw Error(ErrorKind::BadRegime, "boundary regime needs a >= 1");
  const int a = room_above;
  return {regime, ExactRat(qpow(q, a - 1) * (up + 1) * (up - 1), qpow(q, a) - minus_one_pow(a))};
}

AsymptoticReport asymptotic_symplectic(Regime regime, int hull, std::int64_t q, int room_above) {
  require_prime_power(q);
  if (hull < 0) throw Error(ErrorKind::BadRange, "hull dimension must be non-negative");
  const ExactInt cof = ratio_cofactor(hull, q, 2);
  if (regime == Regime::Joint) return {regime, ExactRat(cof, ExactInt(q) * q)};
  if (room_above < 2 || room_above % 2 != 0) throw Error(ErrorKind::BadRegime, "boundary regime needs even a >= 2");
  const int a = room_above;
  return {regime, ExactRat(qpow(q, a - 2) * cof, qpow(q, a) - 1)};
}

ComparisonTable comparison_table(const std::vector<std::int64_t>& qs) {
  ComparisonTable t;
  t.columns = {
      {FormKind::Kind::Euclidean, 1, "case-split", "eta-char + mod 4"},
      {FormKind::Kind::Hermitian, 1, "q^{n-2l-1}(q^{l+1}+1) / ((q^a-(-1)^a)(q^b-(-1)^b))", "l=0, n even, k in {1,n-1}"},
      {FormKind::Kind::Symplectic, 2, "q^{a+b-2} / ((q^a-1)(q^b-1))", "q=2, l=0, 4<=k<=2n-4"},
  };
  for (std::int64_t q : qs) {
    require_prime_power(q);
    ComparisonEntry e;
    e.q = q;
    const ExactRat herm = asymptotic_hermitian(Regime::Joint, 0, q).limit;
    const ExactRat symp = asymptotic_symplectic(Regime::Joint, 0, q).limit;
    // The Euclidean column holds fixed reference constants; there is
    // no Euclidean mass formula here to derive them from.
    const ExactRat eucl(ExactInt(q) * q - 1, q);
    e.alpha_lower_bound = {ExactRat(1, 2), ExactRat(q, q + 1), std::nullopt};
    e.ratio_asymptotic = {eucl, herm, symp};
    e.alpha_asymptotic = {eucl / ratio_cofactor(0, q, 1), herm / ratio_cofactor(0, q, 1),
                          symp / ratio_cofactor(0, q, 2)};
    t.entries.push_back(std::move(e));
  }
  return t;
}

}  // namespace hullcount
