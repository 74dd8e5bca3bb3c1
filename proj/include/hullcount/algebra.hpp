#pragma once

// Small finite fields F_{p^m} and dense linear algebra over them: RREF, rank,
// and the Euclidean / Hermitian / symplectic Gram products.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hullcount {

inline constexpr int kDefaultMaxFieldOrder = 256;

/// An element of a FiniteField, stored by its index in the field's canonical
/// element order: index = sum_i c_i p^i over the polynomial-basis
/// coefficients c_0..c_{m-1}. Index 0 is zero and index 1 is one.
struct FieldElem {
  std::uint16_t index = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// F_{p^m} realised as F_p[x]/(f) with f monic irreducible of degree m.
/// Cheap to copy; all copies share the same immutable arithmetic tables.
class FiniteField {
 public:
  int characteristic() const noexcept;
  int degree() const noexcept;
  int order() const noexcept;
  /// Monic modulus, low-degree coefficient first (length degree() + 1).
  const std::vector<int>& modulus() const noexcept;

  FieldElem zero() const noexcept { return FieldElem{0}; }
  FieldElem one() const noexcept { return FieldElem{1}; }

  FieldElem element_at(int index) const;
  FieldElem from_coeffs(std::span<const int> coeffs) const;
  /// Image of an integer in the prime subfield.
  FieldElem from_integer(std::int64_t value) const;
  std::vector<int> coeffs(FieldElem x) const;
  /// All elements in canonical order.
  std::vector<FieldElem> elements() const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t exp) const noexcept;

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept;

 private:
  struct Tables;
  explicit FiniteField(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
  friend FiniteField make_field(int p, int m, int max_order);

  std::shared_ptr<const Tables> tables_;
};

/// Builds F_{p^m} with the lexicographically smallest monic irreducible
/// modulus (coefficients compared from c_0 upward). Throws NonPrime or
/// DegreeTooLarge (m < 1 or p^m > max_order).
FiniteField make_field(int p, int m, int max_order = kDefaultMaxFieldOrder);

/// Convenience: the field with `order` elements.
FiniteField make_field_of_order(int order, int max_order = kDefaultMaxFieldOrder);

/// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const int> poly, int p);

/// x -> x^q where q^2 = |F|. Throws BadSubfieldOrder otherwise.
FieldElem frobenius(const FiniteField& field, FieldElem x, int q);

class MatrixGF {
 public:
  MatrixGF(FiniteField field, int rows, int cols);
  MatrixGF(FiniteField field, int rows, int cols, std::vector<FieldElem> entries);

  static MatrixGF identity(const FiniteField& field, int n);
  /// Entries given as element indices, row-major.
  static MatrixGF from_indices(const FiniteField& field, int rows, int cols,
                               std::span<const int> indices);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const FiniteField& field() const noexcept { return field_; }

  FieldElem operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  FieldElem& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::span<const FieldElem> row(int r) const {
    return std::span<const FieldElem>(entries_).subspan(static_cast<std::size_t>(r * cols_),
                                                        static_cast<std::size_t>(cols_));
  }
  const std::vector<FieldElem>& entries() const noexcept { return entries_; }

  MatrixGF transpose() const;
  MatrixGF operator*(const MatrixGF& rhs) const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  FiniteField field_;
  int rows_;
  int cols_;
  std::vector<FieldElem> entries_;
};

struct RrefResult {
  MatrixGF matrix;
  int rank;
  std::vector<int> pivot_cols;
};

RrefResult rref(const MatrixGF& m);
int rank(const MatrixGF& m);

/// Which inner product the Gram matrix and hull are taken against.
class FormKind {
 public:
  enum class Kind { Euclidean, Hermitian, Symplectic };

  static FormKind euclidean() { return FormKind(Kind::Euclidean, 0); }
  /// Hermitian over F_{q^2}; subfield_order 0 means "derive q from the field".
  static FormKind hermitian(int subfield_order = 0) { return FormKind(Kind::Hermitian, subfield_order); }
  static FormKind symplectic() { return FormKind(Kind::Symplectic, 0); }

  Kind kind() const noexcept { return kind_; }
  int subfield_order() const noexcept { return subfield_order_; }

  friend bool operator==(const FormKind&, const FormKind&) = default;

 private:
  FormKind(Kind kind, int q) : kind_(kind), subfield_order_(q) {}
  Kind kind_;
  int subfield_order_;
};

const char* to_string(FormKind::Kind kind) noexcept;

/// Subfield order q with q^2 = |field|. Throws FieldNotASquareForHermitian
/// for odd extension degree and BadSubfieldOrder if `requested` is non-zero
/// and does not square to the field order.
int hermitian_subfield_order(const FiniteField& field, int requested = 0);

/// G G^T, G conj(G)^T (entrywise q-th power), or G Omega G^T with
/// Omega = [[0, I], [-I, 0]].
MatrixGF gram(const MatrixGF& generator, const FormKind& form);

/// k - rank(gram(G)); G must have full row rank (RankDeficientGenerator).
int hull_dim(const MatrixGF& generator, const FormKind& form);

}  // namespace hullcount
