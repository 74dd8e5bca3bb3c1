#include "hullcount/algebra.hpp"

#include "hullcount/error.hpp"
#include "hullcount/exactnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace hullcount {

struct FiniteField::Tables {
  int p = 0;
  int m = 0;
  int order = 0;
  std::vector<int> modulus;
  std::vector<std::uint16_t> add;  // order x order
  std::vector<std::uint16_t> mul;  // order x order
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;  // inv[0] unused
};

namespace {

int mod(std::int64_t v, int p) {
  const auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

std::vector<int> index_to_coeffs(int index, int p, int m) {
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    c[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return c;
}

int coeffs_to_index(std::span<const int> c, int p) {
  int index = 0;
  for (std::size_t i = c.size(); i-- > 0;) index = index * p + c[i];
  return index;
}

void trim(std::vector<int>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a modulo a monic-or-not b over F_p; b must be non-zero.
std::vector<int> poly_rem(std::vector<int> a, std::vector<int> b, int p) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::logic_error("poly_rem: zero divisor");
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x) {
      if ((b.back() * x) % p == 1) return x;
    }
    throw std::logic_error("poly_rem: non-invertible leading coefficient");
  }();
  while (a.size() >= b.size()) {
    const int factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = mod(a[shift + i] - static_cast<std::int64_t>(factor) * b[i], p);
    }
    trim(a);
  }
  return a;
}

// Odometer over monic polynomials of a fixed degree with c_0 as the most
// significant digit, i.e. lexicographic order on (c_0, c_1, ..., c_{deg-1}).
bool next_monic(std::vector<int>& poly, int p) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t i = deg; i-- > 0;) {
    if (++poly[i] < p) return true;
    poly[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(std::span<const int> poly_in, int p) {
  std::vector<int> poly(poly_in.begin(), poly_in.end());
  for (auto& c : poly) c = mod(c, p);
  trim(poly);
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<int> divisor(static_cast<std::size_t>(d + 1), 0);
    divisor.back() = 1;
    do {
      if (poly_rem(poly, divisor, p).empty()) return false;
    } while (next_monic(divisor, p));
  }
  return true;
}

FiniteField make_field(int p, int m, int max_order) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::DegreeTooLarge, "extension degree must be at least 1");
  std::int64_t order = 1;
  for (int i = 0; i < m; ++i) {
    order *= p;
    if (order > max_order) {
      throw Error(ErrorKind::DegreeTooLarge, std::to_string(p) + "^" + std::to_string(m) +
                                                 " exceeds the maximum field order " +
                                                 std::to_string(max_order));
    }
  }

  auto t = std::make_shared<FiniteField::Tables>();
  t->p = p;
  t->m = m;
  t->order = static_cast<int>(order);

  if (m == 1) {
    t->modulus = {0, 1};
  } else {
    std::vector<int> candidate(static_cast<std::size_t>(m + 1), 0);
    candidate.back() = 1;
    do {
      if (is_irreducible(candidate, p)) break;
    } while (next_monic(candidate, p));
    t->modulus = candidate;
  }

  const int Q = t->order;
  const auto QQ = static_cast<std::size_t>(Q) * static_cast<std::size_t>(Q);
  t->add.resize(QQ);
  t->mul.resize(QQ);
  t->neg.resize(static_cast<std::size_t>(Q));
  t->inv.assign(static_cast<std::size_t>(Q), 0);

  std::vector<std::vector<int>> coeffs(static_cast<std::size_t>(Q));
  for (int i = 0; i < Q; ++i) coeffs[static_cast<std::size_t>(i)] = index_to_coeffs(i, p, m);

  for (int a = 0; a < Q; ++a) {
    const auto& ca = coeffs[static_cast<std::size_t>(a)];
    std::vector<int> cn(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cn[static_cast<std::size_t>(i)] = mod(-ca[static_cast<std::size_t>(i)], p);
    t->neg[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(coeffs_to_index(cn, p));

    for (int b = 0; b < Q; ++b) {
      const auto& cb = coeffs[static_cast<std::size_t>(b)];
      std::vector<int> sum(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        sum[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
      }
      const auto cell = static_cast<std::size_t>(a) * static_cast<std::size_t>(Q) + static_cast<std::size_t>(b);
      t->add[cell] = static_cast<std::uint16_t>(coeffs_to_index(sum, p));

      std::vector<int> prod(static_cast<std::size_t>(2 * m - 1), 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p;
        }
      }
      std::vector<int> reduced = m == 1 ? prod : poly_rem(prod, t->modulus, p);
      reduced.resize(static_cast<std::size_t>(m), 0);
      t->mul[cell] = static_cast<std::uint16_t>(coeffs_to_index(reduced, p));
    }
  }

  for (int a = 1; a < Q; ++a) {
    for (int b = 1; b < Q; ++b) {
      if (t->mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(Q) + static_cast<std::size_t>(b)] == 1) {
        t->inv[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
        break;
      }
    }
    if (t->inv[static_cast<std::size_t>(a)] == 0) throw std::logic_error("make_field: modulus is not irreducible");
  }

  return FiniteField(std::move(t));
}

FiniteField make_field_of_order(int order, int max_order) {
  const auto pp = prime_power(order);
  if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(order) + " is not a prime power");
  return make_field(static_cast<int>(pp->prime), pp->exponent, max_order);
}

int FiniteField::characteristic() const noexcept { return tables_->p; }
int FiniteField::degree() const noexcept { return tables_->m; }
int FiniteField::order() const noexcept { return tables_->order; }
const std::vector<int>& FiniteField::modulus() const noexcept { return tables_->modulus; }

FieldElem FiniteField::element_at(int index) const {
  if (index < 0 || index >= tables_->order) {
    throw Error(ErrorKind::BadRange, "element index " + std::to_string(index) + " out of range");
  }
  return FieldElem{static_cast<std::uint16_t>(index)};
}

FieldElem FiniteField::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(tables_->m)) {
    throw Error(ErrorKind::BadRange, "too many coefficients for the extension degree");
  }
  std::vector<int> c(static_cast<std::size_t>(tables_->m), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = mod(coeffs[i], tables_->p);
  return FieldElem{static_cast<std::uint16_t>(coeffs_to_index(c, tables_->p))};
}

FieldElem FiniteField::from_integer(std::int64_t value) const {
  return FieldElem{static_cast<std::uint16_t>(mod(value, tables_->p))};
}

std::vector<int> FiniteField::coeffs(FieldElem x) const { return index_to_coeffs(x.index, tables_->p, tables_->m); }

std::vector<FieldElem> FiniteField::elements() const {
  std::vector<FieldElem> out(static_cast<std::size_t>(tables_->order));
  for (int i = 0; i < tables_->order; ++i) out[static_cast<std::size_t>(i)] = FieldElem{static_cast<std::uint16_t>(i)};
  return out;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const noexcept {
  return FieldElem{tables_->add[static_cast<std::size_t>(a.index) * static_cast<std::size_t>(tables_->order) + b.index]};
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const noexcept {
  return FieldElem{tables_->mul[static_cast<std::size_t>(a.index) * static_cast<std::size_t>(tables_->order) + b.index]};
}

FieldElem FiniteField::neg(FieldElem a) const noexcept { return FieldElem{tables_->neg[a.index]}; }

FieldElem FiniteField::inv(FieldElem a) const {
  if (a.index == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  return FieldElem{tables_->inv[a.index]};
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t exp) const noexcept {
  FieldElem result = one();
  while (exp > 0) {
    if (exp & 1U) result = mul(result, a);
    a = mul(a, a);
    exp >>= 1U;
  }
  return result;
}

bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
  if (a.tables_ == b.tables_) return true;
  return a.tables_->p == b.tables_->p && a.tables_->modulus == b.tables_->modulus;
}

int hermitian_subfield_order(const FiniteField& field, int requested) {
  if (field.degree() % 2 != 0) {
    throw Error(ErrorKind::FieldNotASquareForHermitian,
                "field of order " + std::to_string(field.order()) + " has odd degree over its prime field");
  }
  int q = 1;
  for (int i = 0; i < field.degree() / 2; ++i) q *= field.characteristic();
  if (requested != 0 && requested != q) {
    throw Error(ErrorKind::BadSubfieldOrder,
                std::to_string(requested) + "^2 != " + std::to_string(field.order()));
  }
  return q;
}

FieldElem frobenius(const FiniteField& field, FieldElem x, int q) {
  const auto pp = prime_power(q);
  if (!pp || pp->prime != field.characteristic() || static_cast<std::int64_t>(q) * q != field.order()) {
    throw Error(ErrorKind::BadSubfieldOrder,
                std::to_string(q) + " is not the square root of the field order " + std::to_string(field.order()));
  }
  return field.pow(x, static_cast<std::uint64_t>(q));
}

MatrixGF::MatrixGF(FiniteField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::BadRange, "negative matrix dimension");
}

MatrixGF::MatrixGF(FiniteField field, int rows, int cols, std::vector<FieldElem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::BadRange, "negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
  }
  for (auto e : entries_) {
    if (e.index >= field_.order()) throw Error(ErrorKind::BadRange, "entry outside the field");
  }
}

MatrixGF MatrixGF::identity(const FiniteField& field, int n) {
  MatrixGF m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

MatrixGF MatrixGF::from_indices(const FiniteField& field, int rows, int cols, std::span<const int> indices) {
  if (indices.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
  }
  std::vector<FieldElem> entries;
  entries.reserve(indices.size());
  for (int idx : indices) entries.push_back(field.element_at(idx));
  return MatrixGF(field, rows, cols, std::move(entries));
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

MatrixGF MatrixGF::operator*(const MatrixGF& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  if (!(field_ == rhs.field_)) throw Error(ErrorKind::DimensionMismatch, "operands over different fields");
  MatrixGF out(field_, rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < rhs.cols_; ++c) {
      FieldElem acc = field_.zero();
      for (int i = 0; i < cols_; ++i) acc = field_.add(acc, field_.mul((*this)(r, i), rhs(i, c)));
      out(r, c) = acc;
    }
  }
  return out;
}

RrefResult rref(const MatrixGF& input) {
  MatrixGF m = input;
  const FiniteField& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != f.zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    const FieldElem scale = f.inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == f.zero()) continue;
      const FieldElem factor = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), r, std::move(pivots)};
}

int rank(const MatrixGF& m) { return rref(m).rank; }

const char* to_string(FormKind::Kind kind) noexcept {
  switch (kind) {
    case FormKind::Kind::Euclidean: return "euclidean";
    case FormKind::Kind::Hermitian: return "hermitian";
    case FormKind::Kind::Symplectic: return "symplectic";
  }
  return "unknown";
}

MatrixGF gram(const MatrixGF& g, const FormKind& form) {
  const FiniteField& f = g.field();
  const int k = g.rows();
  MatrixGF out(f, k, k);
  switch (form.kind()) {
    case FormKind::Kind::Euclidean:
      return g * g.transpose();
    case FormKind::Kind::Hermitian: {
      const int q = hermitian_subfield_order(f, form.subfield_order());
      std::vector<FieldElem> conj;
      conj.reserve(g.entries().size());
      for (auto e : g.entries()) conj.push_back(f.pow(e, static_cast<std::uint64_t>(q)));
      return g * MatrixGF(f, g.rows(), g.cols(), std::move(conj)).transpose();
    }
    case FormKind::Kind::Symplectic: {
      if (g.cols() % 2 != 0) {
        throw Error(ErrorKind::OddAmbientForSymplectic, "ambient length " + std::to_string(g.cols()) + " is odd");
      }
      const int n = g.cols() / 2;
      // <x, y>_S = sum_t x_t y_{n+t} - x_{n+t} y_t
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          FieldElem acc = f.zero();
          for (int t = 0; t < n; ++t) {
            acc = f.add(acc, f.mul(g(i, t), g(j, n + t)));
            acc = f.sub(acc, f.mul(g(i, n + t), g(j, t)));
          }
          out(i, j) = acc;
        }
      }
      return out;
    }
  }
  return out;
}

int hull_dim(const MatrixGF& g, const FormKind& form) {
  const int r = rank(g);
  if (r != g.rows()) {
    throw Error(ErrorKind::RankDeficientGenerator,
                std::to_string(g.rows()) + " rows but rank " + std::to_string(r));
  }
  return g.rows() - rank(gram(g, form));
}

}  // namespace hullcount
