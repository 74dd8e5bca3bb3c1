#include "hullcount/algebra.hpp"
#include "hullcount/error.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hullcount;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no hullcount::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Field, PrimeField) {
  const FiniteField f2 = make_field(2, 1);
  EXPECT_EQ(f2.order(), 2);
  EXPECT_EQ(f2.elements().size(), 2U);
  EXPECT_EQ(f2.modulus(), (std::vector<int>{0, 1}));
  EXPECT_EQ(f2.add(f2.one(), f2.one()), f2.zero());
}

TEST(Field, CanonicalModuli) {
  EXPECT_EQ(make_field(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(make_field(2, 3).modulus(), (std::vector<int>{1, 0, 1, 1}));
  EXPECT_EQ(make_field(2, 8).order(), 256);
}

TEST(Field, F4UnitsHaveOrderDividingThree) {
  const FiniteField f = make_field(2, 2);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(f.pow(f.element_at(i), 3), f.one());
}

TEST(Field, F9HasFourNonzeroSquares) {
  const FiniteField f = make_field(3, 2);
  std::set<FieldElem> squares;
  for (int i = 1; i < 9; ++i) squares.insert(f.mul(f.element_at(i), f.element_at(i)));
  EXPECT_EQ(squares.size(), 4U);
}

TEST(Field, Errors) {
  EXPECT_EQ(kind_of([] { make_field(4, 1); }), ErrorKind::NonPrime);
  EXPECT_EQ(kind_of([] { make_field(2, 9); }), ErrorKind::DegreeTooLarge);
  EXPECT_EQ(kind_of([] { make_field(3, 0); }), ErrorKind::DegreeTooLarge);
  EXPECT_THROW(make_field(2, 2).inv(FieldElem{0}), std::domain_error);
}

TEST(Field, Irreducibility) {
  const std::vector<int> x2_plus_1{1, 0, 1};
  EXPECT_FALSE(is_irreducible(x2_plus_1, 2));  // (x+1)^2
  EXPECT_TRUE(is_irreducible(x2_plus_1, 3));
  EXPECT_TRUE(is_irreducible(std::vector<int>{1, 1, 0, 0, 1}, 2));
}

TEST(Frobenius, F4) {
  const FiniteField f = make_field(2, 2);
  EXPECT_EQ(frobenius(f, f.one(), 2), f.one());
  const FieldElem omega = f.from_coeffs(std::vector<int>{0, 1});
  const FieldElem omega2 = f.from_coeffs(std::vector<int>{1, 1});  // x^2 = x + 1
  EXPECT_EQ(f.mul(omega, omega), omega2);
  EXPECT_EQ(frobenius(f, omega, 2), omega2);
  EXPECT_EQ(kind_of([&] { frobenius(f, omega, 4); }), ErrorKind::BadSubfieldOrder);
}

TEST(Frobenius, InvolutionOnF9) {
  const FiniteField f = make_field(3, 2);
  for (auto x : f.elements()) EXPECT_EQ(frobenius(f, frobenius(f, x, 3), 3), x);
}

TEST(Rref, Examples) {
  const FiniteField f = make_field(2, 1);
  const MatrixGF id = MatrixGF::identity(f, 3);
  const auto r1 = rref(id);
  EXPECT_EQ(r1.matrix, id);
  EXPECT_EQ(r1.rank, 3);
  EXPECT_EQ(r1.pivot_cols, (std::vector<int>{0, 1, 2}));

  const MatrixGF zero(f, 2, 4);
  const auto r2 = rref(zero);
  EXPECT_EQ(r2.matrix, zero);
  EXPECT_EQ(r2.rank, 0);
  EXPECT_TRUE(r2.pivot_cols.empty());

  const std::vector<int> ones{1, 1, 1, 1};
  const auto r3 = rref(MatrixGF::from_indices(f, 2, 2, ones));
  const std::vector<int> expect{1, 1, 0, 0};
  EXPECT_EQ(r3.matrix, MatrixGF::from_indices(f, 2, 2, expect));
  EXPECT_EQ(r3.rank, 1);
}

TEST(Matrix, ShapeValidation) {
  const FiniteField f = make_field(2, 1);
  EXPECT_THROW(MatrixGF(f, 2, 2, std::vector<FieldElem>(3)), Error);
  const MatrixGF a(f, 2, 3);
  EXPECT_THROW(a * a, Error);
}

TEST(Gram, Examples) {
  const FiniteField f4 = make_field(2, 2);
  const FiniteField f2 = make_field(2, 1);
  const std::vector<int> e1{1, 0, 0, 0};

  const MatrixGF g4 = MatrixGF::from_indices(f4, 1, 4, e1);
  EXPECT_EQ(gram(g4, FormKind::hermitian()), MatrixGF::from_indices(f4, 1, 1, std::vector<int>{1}));

  const MatrixGF g2 = MatrixGF::from_indices(f2, 1, 4, e1);
  EXPECT_EQ(gram(g2, FormKind::symplectic()), MatrixGF(f2, 1, 1));
  EXPECT_EQ(hull_dim(g2, FormKind::symplectic()), 1);

  // [1 omega] with omega = x (index 2): 1 + omega * omega^2 = 0.
  const MatrixGF g = MatrixGF::from_indices(f4, 1, 2, std::vector<int>{1, 2});
  EXPECT_EQ(gram(g, FormKind::hermitian()), MatrixGF(f4, 1, 1));
  EXPECT_EQ(hull_dim(g, FormKind::hermitian()), 1);

  const MatrixGF padded = MatrixGF::from_indices(f2, 2, 4, std::vector<int>{1, 0, 0, 0, 0, 1, 0, 0});
  EXPECT_EQ(hull_dim(padded, FormKind::euclidean()), 0);
}

TEST(Gram, Errors) {
  const FiniteField f2 = make_field(2, 1);
  const FiniteField f8 = make_field(2, 3);
  EXPECT_EQ(kind_of([&] { gram(MatrixGF(f2, 1, 3), FormKind::symplectic()); }), ErrorKind::OddAmbientForSymplectic);
  EXPECT_EQ(kind_of([&] { gram(MatrixGF(f8, 1, 2), FormKind::hermitian()); }),
            ErrorKind::FieldNotASquareForHermitian);
  const MatrixGF dup = MatrixGF::from_indices(f2, 2, 2, std::vector<int>{1, 1, 1, 1});
  EXPECT_EQ(kind_of([&] { hull_dim(dup, FormKind::euclidean()); }), ErrorKind::RankDeficientGenerator);
}

TEST(Gram, HermitianOverF16UsesSubfieldFour) {
  const FiniteField f16 = make_field(2, 4);
  EXPECT_EQ(hermitian_subfield_order(f16), 4);
  EXPECT_EQ(kind_of([&] { hermitian_subfield_order(f16, 2); }), ErrorKind::BadSubfieldOrder);
  // <x, x>_H = x^{q+1} is the norm to F_4, so it is never zero for x != 0.
  for (int i = 1; i < 16; ++i) {
    const MatrixGF g = MatrixGF::from_indices(f16, 1, 1, std::vector<int>{i});
    EXPECT_EQ(hull_dim(g, FormKind::hermitian()), 0);
  }
}

TEST(Gram, SymplecticInOddCharacteristicIsSkew) {
  const FiniteField f3 = make_field(3, 1);
  const MatrixGF g = MatrixGF::from_indices(f3, 2, 4, std::vector<int>{1, 0, 0, 0, 0, 0, 1, 0});
  const MatrixGF m = gram(g, FormKind::symplectic());
  EXPECT_EQ(m(0, 1), f3.one());
  EXPECT_EQ(m(1, 0), f3.neg(f3.one()));
  EXPECT_EQ(hull_dim(g, FormKind::symplectic()), 0);
}
