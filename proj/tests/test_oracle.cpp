#include "brute_force.hpp"
#include "hullcount/error.hpp"
#include "hullcount/formulas.hpp"
#include "hullcount/oracle.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace hullcount;

namespace {

std::map<int, std::uint64_t> as_u64(const HullSpectrum& s) {
  std::map<int, std::uint64_t> out;
  for (const auto& [l, c] : s.counts) out[l] = static_cast<std::uint64_t>(c);
  return out;
}

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

TEST(PivotSubsets, ColexOrder) {
  const auto s = pivot_subsets(4, 2);
  const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(s, expected);
  EXPECT_EQ(pivot_subsets(3, 0).size(), 1U);
  EXPECT_TRUE(pivot_subsets(2, 3).empty());
}

TEST(SubspaceIterator, YieldCounts) {
  struct Case {
    int n, k, Q;
    long long expected;
  };
  for (const Case c : {Case{2, 1, 2, 3}, Case{4, 2, 2, 35}, Case{2, 1, 4, 5}}) {
    SubspaceIterator it(c.n, c.k, make_field_of_order(c.Q));
    while (it.next()) {
    }
    EXPECT_EQ(it.yielded(), static_cast<std::uint64_t>(c.expected));
  }
}

TEST(SubspaceIterator, YieldsDistinctRrefBasesMatchingGaussianBinomial) {
  for (int Q : {2, 3, 4}) {
    const FiniteField f = make_field_of_order(Q);
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (enumeration_work_estimate(n, k, Q) > 200000) continue;
        SubspaceIterator it(n, k, f);
        std::set<std::vector<FieldElem>> seen;
        while (it.next()) {
          const MatrixGF& m = it.current();
          const auto r = rref(m);
          EXPECT_EQ(r.rank, k);
          EXPECT_EQ(r.matrix, m);
          EXPECT_TRUE(seen.insert(m.entries()).second);
        }
        EXPECT_EQ(ExactInt(it.yielded()), gaussian_binomial(n, k, Q)) << n << ' ' << k << ' ' << Q;
      }
    }
  }
}

TEST(SubspaceIterator, WorkLimit) {
  const FiniteField f = make_field_of_order(4);
  try {
    SubspaceIterator it(8, 4, f, 1000);
    FAIL() << "expected WorkLimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WorkLimitExceeded);
    // The estimate 4^16 * C(8,4) appears in the message.
    EXPECT_NE(std::string(e.what()).find("300647710720"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([&] { SubspaceIterator(3, 4, f); }), ErrorKind::BadRange);
}

TEST(HullSpectrum, Examples) {
  const auto h = hull_spectrum(4, 1, make_field_of_order(4), FormKind::hermitian());
  EXPECT_EQ(as_u64(h), (std::map<int, std::uint64_t>{{0, 40}, {1, 45}}));
  EXPECT_EQ(h.q, 2);

  const auto s = hull_spectrum(4, 2, make_field_of_order(2), FormKind::symplectic());
  EXPECT_EQ(as_u64(s), (std::map<int, std::uint64_t>{{0, 20}, {2, 15}}));

  for (int Q : {2, 3, 4}) {
    const FiniteField f = make_field_of_order(Q);
    EXPECT_EQ(as_u64(hull_spectrum(4, 4, f, FormKind::euclidean())), (std::map<int, std::uint64_t>{{0, 1}}));
    EXPECT_EQ(as_u64(hull_spectrum(4, 4, f, FormKind::symplectic())), (std::map<int, std::uint64_t>{{0, 1}}));
  }
  EXPECT_EQ(as_u64(hull_spectrum(3, 3, make_field_of_order(4), FormKind::hermitian())),
            (std::map<int, std::uint64_t>{{0, 1}}));
}

TEST(HullSpectrum, Preconditions) {
  EXPECT_EQ(kind_of([] { hull_spectrum(3, 1, make_field_of_order(2), FormKind::symplectic()); }),
            ErrorKind::OddAmbientForSymplectic);
  EXPECT_EQ(kind_of([] { hull_spectrum(3, 1, make_field_of_order(8), FormKind::hermitian()); }),
            ErrorKind::FieldNotASquareForHermitian);
}

TEST(HullSpectrum, ThreadedMatchesSerial) {
  const FiniteField f = make_field_of_order(2);
  const auto serial = hull_spectrum(6, 3, f, FormKind::symplectic(), {kDefaultWorkLimit, 1});
  for (unsigned t : {2U, 3U, 7U, 64U}) {
    EXPECT_EQ(hull_spectrum(6, 3, f, FormKind::symplectic(), {kDefaultWorkLimit, t}).counts, serial.counts);
  }
}

TEST(HullSpectrum, MergeIsAdditive) {
  HullSpectrum a, b;
  a.counts = {{0, 3}, {1, 4}};
  b.counts = {{1, 1}, {2, 5}};
  a.merge(b);
  EXPECT_EQ(a.counts, (std::map<int, ExactInt>{{0, 3}, {1, 5}, {2, 5}}));
  EXPECT_EQ(a.total(), 13);
}

TEST(HullSpectrum, AgreesWithCodewordBruteForce) {
  // Independent path: spans of arbitrary generator tuples, hulls by pairing codewords.
  struct Case {
    int n, k, Q;
    FormKind::Kind form;
  };
  const std::vector<Case> cases{
      {4, 2, 2, FormKind::Kind::Euclidean},  {4, 1, 3, FormKind::Kind::Euclidean},
      {3, 1, 4, FormKind::Kind::Hermitian},  {3, 2, 4, FormKind::Kind::Hermitian},
      {4, 2, 2, FormKind::Kind::Symplectic}, {4, 1, 3, FormKind::Kind::Symplectic},
      {6, 3, 2, FormKind::Kind::Symplectic}, {5, 2, 2, FormKind::Kind::Euclidean},
  };
  for (const auto& c : cases) {
    const FiniteField f = make_field_of_order(c.Q);
    const std::uint64_t q = c.form == FormKind::Kind::Hermitian ? 2 : 0;
    FormKind form = FormKind::euclidean();
    if (c.form == FormKind::Kind::Hermitian) form = FormKind::hermitian();
    if (c.form == FormKind::Kind::Symplectic) form = FormKind::symplectic();
    EXPECT_EQ(as_u64(hull_spectrum(c.n, c.k, f, form)), hullcount::testing::brute_spectrum(f, c.n, c.k, c.form, q))
        << c.n << ' ' << c.k << ' ' << c.Q << ' ' << to_string(c.form);
  }
}

TEST(HullSpectrum, KeysRespectParityAndRange) {
  const FiniteField f2 = make_field_of_order(2);
  for (int n = 2; n <= 8; n += 2) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& [l, c] : hull_spectrum(n, k, f2, FormKind::symplectic()).counts) {
        EXPECT_EQ((k - l) % 2, 0);
        EXPECT_LE(l, std::min(k, n - k));
      }
    }
  }
  const FiniteField f4 = make_field_of_order(4);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& [l, c] : hull_spectrum(n, k, f4, FormKind::hermitian()).counts) {
        EXPECT_LE(l, std::min(k, n - k));
      }
    }
  }
}

TEST(SpectrumVsFormula, Examples) {
  const auto h = spectrum_vs_formula(5, 2, 2, FormKind::Kind::Hermitian);
  EXPECT_TRUE(h.passed());
  ASSERT_EQ(h.cells.size(), 3U);
  EXPECT_EQ(h.cells[0].oracle, 3520);
  EXPECT_EQ(h.cells[1].oracle, 1980);
  EXPECT_EQ(h.cells[2].oracle, 297);

  const auto s = spectrum_vs_formula(6, 2, 3, FormKind::Kind::Symplectic);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.oracle_total, 7371 + 3640);
  EXPECT_EQ(s.expected_total, gaussian_binomial(6, 2, 3));

  const auto e = spectrum_vs_formula(4, 2, 2, FormKind::Kind::Euclidean);
  EXPECT_TRUE(e.passed());
  EXPECT_EQ(e.oracle_total, 35);
  for (const auto& c : e.cells) EXPECT_FALSE(c.formula.has_value());
}

TEST(SpectrumVsFormula, CorruptionIsDetected) {
  CheckOptions o;
  o.corrupt_formula = true;
  const auto h = spectrum_vs_formula(4, 1, 2, FormKind::Kind::Hermitian, o);
  EXPECT_FALSE(h.passed());
  ASSERT_EQ(h.diff().size(), 1U);
  EXPECT_NE(h.diff()[0].find("l=0"), std::string::npos);
}

TEST(SpectrumCsv, Format) {
  const auto h = hull_spectrum(4, 1, make_field_of_order(4), FormKind::hermitian());
  std::ostringstream os;
  os << kSpectrumCsvHeader << '\n';
  write_spectrum_csv(os, h);
  EXPECT_EQ(os.str(), "n,k,q,form,l,count\n4,1,2,hermitian,0,40\n4,1,2,hermitian,1,45\n");
}
