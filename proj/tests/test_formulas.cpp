#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"

#include <gtest/gtest.h>

using namespace hullcount;

namespace {

struct TableRow {
  int n, k;
  std::int64_t q;
  std::vector<long long> counts;
};

// Reference table values, ambient length first.
const std::vector<TableRow> kHermitianTable{
    {4, 1, 2, {40, 45}},
    {5, 1, 2, {176, 165}},
    {6, 1, 2, {672, 693}},
    {7, 1, 2, {2752, 2709}},
    {4, 2, 2, {240, 90, 27}},
    {5, 2, 2, {3520, 1980, 297}},
    {6, 2, 2, {59136, 27720, 6237}},
    {6, 3, 2, {197120, 166320, 12474, 891}},
    {7, 2, 2, {924672, 476784, 89397}},
    {7, 3, 2, {13561856, 9535680, 1072764, 38313}},
    {8, 2, 2, {14970880, 7368480, 1519749}},
    {4, 1, 3, {540, 280}},
    {5, 1, 3, {4941, 2440}},
    {6, 1, 3, {44226, 22204}},
    {4, 2, 3, {5670, 1680, 112}},
    {5, 2, 3, {444690, 153720, 6832}},
    {6, 2, 3, {36420111, 11990160, 621712}},
    {6, 3, 3, {312172380, 125896680, 3730272, 27328}},
};

const std::vector<TableRow> kSymplecticTable{
    {4, 2, 2, {20, 15}},
    {6, 2, 2, {336, 315}},
    {8, 2, 2, {5440, 5355}},
    {8, 4, 2, {91392, 107100, 2295}},
    {10, 2, 2, {87296, 86955}},
    {10, 4, 2, {23744512, 29216880, 782595}},
    {12, 4, 2, {6100942848LL, 7596388800LL, 213648435}},
    {12, 6, 2, {98777169920LL, 127619331840LL, 4272968700LL, 4922775}},
    {4, 2, 3, {90, 40}},
    {6, 2, 3, {7371, 3640}},
    {8, 2, 3, {597780, 298480}},
    {8, 4, 3, {48958182, 26863200, 91840}},
};

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

TEST(HermitianLcd, Examples) {
  EXPECT_EQ(hermitian_lcd_count(5, 0, 2), 1);
  EXPECT_EQ(hermitian_lcd_count(4, 1, 2), 40);
  EXPECT_EQ(hermitian_lcd_count(4, 2, 3), 5670);
  EXPECT_EQ(kind_of([] { hermitian_lcd_count(3, 4, 2); }), ErrorKind::BadRange);
}

TEST(UnifiedFactor, Examples) {
  const HermitianParams p{4, 2, 1, 2};
  EXPECT_EQ(p.lcd_dim(), 1);
  EXPECT_EQ(p.codim_of_lcd(), 3);
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(unified_factor(1, p), ExactRat(ExactInt(9), ExactInt(4)));
  EXPECT_EQ((unified_factor(1, p) * hermitian_lcd_count(4, 1, 2)).to_integer(), 90);

  const HermitianParams even{4, 2, 2, 2};  // k0 = 0, s = 4
  EXPECT_EQ(even.sign(), -1);
  EXPECT_EQ(unified_factor(1, even), hermitian_factor_even_branch(4, 0, 1, 2));
}

TEST(UnifiedFactor, Errors) {
  EXPECT_EQ(kind_of([] { unified_factor(0, HermitianParams{4, 2, 1, 2}); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([] { unified_factor(2, HermitianParams{4, 2, 1, 2}); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([] { unified_factor(1, HermitianParams{4, 3, 2, 2}); }), ErrorKind::BadRange);
}

TEST(UnifiedFactor, MatchesParityBranch) {
  for (std::int64_t q : {2, 3, 4}) {
    for (int n = 1; n <= 10; ++n) {
      for (int k0 = 0; k0 <= n; ++k0) {
        const int s = n - k0;
        for (int i = 1; 2 * i <= s; ++i) {
          // Any hull >= i with 2*hull <= s gives the same F_i.
          const HermitianParams p{n, k0 + i, i, q};
          const ExactRat branch =
              s % 2 != 0 ? hermitian_factor_odd_branch(n, k0, i, q) : hermitian_factor_even_branch(n, k0, i, q);
          EXPECT_EQ(unified_factor(i, p), branch) << n << ' ' << k0 << ' ' << i << ' ' << q;
        }
      }
    }
  }
}

TEST(CountHermitian, MatchesReferenceTable) {
  for (const auto& row : kHermitianTable) {
    for (std::size_t l = 0; l < row.counts.size(); ++l) {
      EXPECT_EQ(count_hermitian({row.n, row.k, static_cast<int>(l), row.q}), row.counts[l])
          << row.n << ' ' << row.k << ' ' << l << ' ' << row.q;
    }
    EXPECT_EQ(count_hermitian({row.n, row.k, static_cast<int>(row.counts.size()), row.q}), 0);
  }
}

TEST(CountHermitian, OutOfRangeIsZero) {
  EXPECT_EQ(count_hermitian({4, 5, 0, 2}), 0);
  EXPECT_EQ(count_hermitian({4, 3, 2, 2}), 0);
  EXPECT_EQ(count_hermitian({4, 2, -1, 2}), 0);
}

TEST(CountSymplectic, MatchesReferenceTable) {
  for (const auto& row : kSymplecticTable) {
    for (std::size_t j = 0; j < row.counts.size(); ++j) {
      const int l = 2 * static_cast<int>(j);
      EXPECT_EQ(count_symplectic({row.n / 2, row.k, l, row.q}), row.counts[j])
          << row.n << ' ' << row.k << ' ' << l << ' ' << row.q;
    }
  }
}

TEST(CountSymplectic, Examples) {
  EXPECT_EQ(count_symplectic({2, 2, 0, 2}), 20);
  EXPECT_EQ(count_symplectic({2, 2, 2, 2}), 15);
  EXPECT_EQ(count_symplectic({4, 4, 2, 2}), 107100);
  EXPECT_EQ(count_symplectic({2, 3, 0, 2}), 0);
  // The whole space F_2^2 has trivial hull, so no 2-dim code of length 2 has hull 2.
  EXPECT_EQ(count_symplectic({1, 2, 2, 2}), 0);
  EXPECT_EQ(count_symplectic({1, 2, 0, 2}), 1);
}

TEST(CountSymplectic, UncorrectedFormIsNotACount) {
  const ExactRat bad = count_symplectic_uncorrected({2, 2, 2, 2});
  EXPECT_EQ(bad, ExactRat(ExactInt(7), ExactInt(3)));
  EXPECT_FALSE(bad.is_integer());
}

TEST(SymplecticLcd, Examples) {
  EXPECT_EQ(symplectic_lcd_count(3, 0, 2), 1);
  EXPECT_EQ(symplectic_lcd_count(2, 1, 2), 20);
  EXPECT_EQ(symplectic_lcd_count(4, 2, 2), 91392);
  EXPECT_EQ(kind_of([] { symplectic_lcd_count(2, 3, 2); }), ErrorKind::BadRange);
  for (int n = 0; n <= 5; ++n) {
    for (int k0 = 0; k0 <= n; ++k0) EXPECT_EQ(symplectic_lcd_count(n, k0, 3), count_symplectic({n, 2 * k0, 0, 3}));
  }
}

TEST(Completeness, HermitianSumsToGaussianBinomial) {
  for (std::int64_t q : {2, 3}) {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n - 1; ++k) {
        ExactInt sum = 0;
        for (int l = 0; l <= k; ++l) {
          const ExactInt c = count_hermitian({n, k, l, q});
          EXPECT_GE(c, 0);
          sum += c;
        }
        EXPECT_EQ(sum, gaussian_binomial(n, k, q * q)) << n << ' ' << k << ' ' << q;
      }
    }
  }
}

TEST(Completeness, SymplecticSumsToGaussianBinomial) {
  for (std::int64_t q : {2, 3}) {
    for (int half = 1; half <= 6; ++half) {
      for (int k = 0; k <= 2 * half; ++k) {
        ExactInt sum = 0;
        for (int l = 0; l <= k; ++l) {
          const ExactInt c = count_symplectic({half, k, l, q});
          EXPECT_GE(c, 0);
          if ((k - l) % 2 != 0) {
            EXPECT_EQ(c, 0);
          }
          sum += c;
        }
        EXPECT_EQ(sum, gaussian_binomial(2 * half, k, q)) << 2 * half << ' ' << k << ' ' << q;
      }
    }
  }
}

TEST(Formulas, LargePrimePowersDoNotNeedAField) {
  // q = 1024 is far beyond the field-table limit; evaluation is pure arithmetic.
  ExactInt sum = 0;
  for (int l = 0; l <= 2; ++l) sum += count_hermitian({5, 2, l, 1024});
  EXPECT_EQ(sum, gaussian_binomial(5, 2, 1024LL * 1024));
}
