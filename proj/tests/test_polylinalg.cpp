#include <gtest/gtest.h>

#include "support.hpp"

using namespace fmtest;

namespace {

PolyMatrix greedy_example_matrix(const RingPtr& r) {
  return mat(r, {{"x", "x*y", "0"}, {"x*y^2", "x^6", "0"}, {"0", "x^2*y^3", "x*y^4"}});
}

PolyMatrix rational_3x4_matrix(const RingPtr& r) {
  return mat(r, {{"x^2", "3*x^2", "5/8*x^2", "7/10*x^2"},
                 {"3/4*x^2", "2*x^2", "7/4*x^2", "9*x^2"},
                 {"x^2", "2/9*x^2", "1/2*x^2", "4/3*x^2"}});
}

}  // namespace

TEST(Submatrix, Basics) {
  auto r = qq({"x", "y"});
  PolyMatrix m = greedy_example_matrix(r);
  EXPECT_EQ(submatrix(m, {{0, 1, 2}, {0, 1, 2}}), m);
  EXPECT_EQ(submatrix(m, {{0, 2}, {0, 2}}), mat(r, {{"x", "0"}, {"0", "x*y^4"}}));
  EXPECT_EQ(submatrix(m, {{1}, {1}}), mat(r, {{"x^6"}}));
  EXPECT_THROW(submatrix(m, {{0, 3}, {0, 1}}), InvalidInput);
  EXPECT_THROW(submatrix(m, {{0, 0}, {0, 1}}), InvalidInput);
}

TEST(Determinant, Examples) {
  auto r = qq({"x", "y"});
  for (auto engine : {DetEngine::Bareiss, DetEngine::Cofactor, DetEngine::Recursive}) {
    EXPECT_EQ(determinant(PolyMatrix::identity(r, 4), engine), P(r, "1"));
    EXPECT_EQ(determinant(mat(r, {{"x", "x*y"}, {"x*y^2", "x^6"}}), engine), P(r, "x^7 - x^2*y^3"));
    EXPECT_EQ(determinant(mat(r, {{"x", "0"}, {"0", "x*y^4"}}), engine), P(r, "x^2*y^4"));
    EXPECT_TRUE(determinant(mat(r, {{"x", "y", "1"}, {"0", "0", "0"}, {"y", "x", "2"}}), engine).is_zero());
    EXPECT_EQ(determinant(mat(r, {{"x+y^3"}}), engine), P(r, "x+y^3"));
    EXPECT_THROW(determinant(mat(r, {{"x", "y"}}), engine), InvalidInput);
  }
}

TEST(Determinant, NeedsRowSwap) {
  auto r = qq({"x"});
  EXPECT_EQ(det_bareiss(mat(r, {{"0", "1"}, {"1", "0"}})), P(r, "-1"));
  EXPECT_EQ(det_bareiss(mat(r, {{"0", "x", "1"}, {"0", "1", "x"}, {"x", "0", "0"}})), P(r, "x^3 - x"));
}

TEST(Determinant, EnginesAgreeWithLeibniz) {
  Rng rng(2024);
  int count = 0;
  for (auto ring : {qq({"x", "y"}), fp(101, {"x", "y", "z"})}) {
    for (int i = 0; i < 120; ++i) {
      const std::size_t n = 1 + i % 5;
      PolyMatrix m = random_matrix(ring, rng, n, n, 1 + i % 3, 3, 0.2);
      const Polynomial oracle = leibniz_det(m);
      ASSERT_EQ(det_bareiss(m), oracle);
      ASSERT_EQ(det_cofactor(m), oracle);
      ASSERT_EQ(recursive_minors(n, m).front(), oracle);
      ++count;
    }
  }
  EXPECT_GE(count, 200);
}

TEST(Determinant, CofactorMatchesBareissOverF101) {
  Rng rng(77);
  auto r = fp(101, {"x", "y", "z"});
  for (int i = 0; i < 500; ++i) {
    PolyMatrix m = random_matrix(r, rng, 4, 4, 2, 2, 0.1);
    ASSERT_EQ(det_cofactor(m), det_bareiss(m));
  }
}

TEST(Determinant, Multiplicative) {
  Rng rng(8);
  auto r = qq({"x", "y"});
  for (int i = 0; i < 20; ++i) {
    PolyMatrix a = random_matrix(r, rng, 3, 3, 2, 2), b = random_matrix(r, rng, 3, 3, 2, 2);
    ASSERT_EQ(det_bareiss(a * b), det_bareiss(a) * det_bareiss(b));
  }
}

TEST(CountMinors, Values) {
  EXPECT_EQ(count_possible_minors(10, 15, 5), 756756);
  EXPECT_EQ(count_possible_minors(7, 12, 4), 17325);
  EXPECT_EQ(count_possible_minors(3, 9, 0), 1);
  EXPECT_THROW(count_possible_minors(3, 4, 4), InvalidInput);
}

TEST(RecursiveMinors, Recursive) {
  auto r = qq({"x"});
  PolyMatrix m = rational_3x4_matrix(r);
  auto rec = recursive_minors(3, m);
  ASSERT_EQ(rec.size(), 4u);
  EXPECT_EQ(rec, all_minors(3, m, DetEngine::Bareiss));
  EXPECT_EQ(rec, all_minors(3, m, DetEngine::Cofactor));
  std::vector<Polynomial> printed{P(r, "1403/60*x^6"), P(r, "449/240*x^6"), P(r, "-292/45*x^6"), P(r, "517/144*x^6")};
  EXPECT_TRUE(same_ideal(rec, printed));
  // Generators themselves match up to sign and order.
  for (const auto& g : printed) {
    bool found = false;
    for (const auto& h : rec) found = found || h == g || h == -g;
    EXPECT_TRUE(found) << g.to_string();
  }
}

TEST(RecursiveMinors, SizeOneIsEntries) {
  auto r = qq({"x", "y"});
  PolyMatrix m = greedy_example_matrix(r);
  EXPECT_EQ(recursive_minors(1, m), m.entries());
  EXPECT_THROW(recursive_minors(0, m), InvalidInput);
  EXPECT_THROW(recursive_minors(4, m), InvalidInput);
}

TEST(RecursiveMinors, BruteForceFiveBySix) {
  Rng rng(31);
  auto r = qq({"x", "y"});
  for (int trial = 0; trial < 3; ++trial) {
    PolyMatrix m = random_matrix(r, rng, 5, 6, 2, 2, 0.15);
    std::vector<Polynomial> oracle;
    for (const auto& rs : subsets(5, 4))
      for (const auto& cs : subsets(6, 4)) oracle.push_back(leibniz_det(submatrix(m, {rs, cs})));
    EXPECT_EQ(recursive_minors(4, m), oracle);
    EXPECT_EQ(recursive_minors(4, m, {.jobs = 4}), oracle);
  }
}

TEST(RecursiveMinors, JobsIndependent) {
  Rng rng(12);
  auto r = fp(101, {"x", "y"});
  PolyMatrix m = random_matrix(r, rng, 6, 7, 2, 3);
  auto one = recursive_minors(5, m, {.jobs = 1});
  EXPECT_EQ(recursive_minors(5, m, {.jobs = 3}), one);
  EXPECT_EQ(recursive_minors(5, m, {.jobs = 4}), one);
  EXPECT_EQ(all_minors(5, m, DetEngine::Bareiss), one);
}

TEST(RecursiveMinors, MemoryGuard) {
  auto r = qq({"x"});
  PolyMatrix m(r, 30, 30);
  EXPECT_GT(recursive_minors_table_size(15, 30, 30), 1e7);
  EXPECT_THROW(recursive_minors(15, m), BudgetExceeded);
  EXPECT_THROW(recursive_minors(3, PolyMatrix(r, 6, 6), {.jobs = 1, .max_table_entries = 10}), BudgetExceeded);
}

TEST(NumericRank, Elliptic) {
  auto r = fp(5, {"x"});
  PolyMatrix m = mat(r, {{"4", "0", "0"}, {"3", "3", "4"}, {"3", "0", "0"}});
  PivotRank pr = numeric_rank(m);
  EXPECT_EQ(pr.rank, 2u);
  SubmatrixChoice c = pr.leading_block(2);
  EXPECT_EQ(c.sorted(), (SubmatrixChoice{{0, 1}, {0, 1}}));
  EXPECT_FALSE(det_bareiss(submatrix(m, c)).is_zero());
  EXPECT_EQ(numeric_rank(PolyMatrix(r, 3, 4)).rank, 0u);
  EXPECT_EQ(numeric_rank(PolyMatrix::identity(r, 5)).rank, 5u);
  EXPECT_THROW(numeric_rank(mat(r, {{"x"}})), InvalidInput);
}

TEST(SymbolicRank, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(symbolic_rank(mat(r, {{"x", "x*y"}, {"x*y^2", "x^6"}})), 2u);
  EXPECT_EQ(symbolic_rank(mat(r, {{"x", "2*x"}})), 1u);
  EXPECT_EQ(symbolic_rank(mat(r, {{"x", "0", "0"}, {"0", "y", "0"}, {"x", "y", "0"}})), 2u);
}

TEST(SymbolicRank, AgainstBruteForceAndTranspose) {
  Rng rng(64);
  auto r = fp(7, {"x", "y"});
  for (int i = 0; i < 60; ++i) {
    const std::size_t rows = 1 + i % 4, cols = 1 + (i / 4) % 4;
    PolyMatrix m = random_matrix(r, rng, rows, cols, 1, 2, 0.4);
    if (i % 3 == 0 && rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * P(r, "x+1");
    }
    const std::size_t rank = symbolic_rank(m);
    ASSERT_EQ(rank, brute_rank(m));
    ASSERT_EQ(rank, symbolic_rank(m.transpose()));
  }
}

TEST(Rank, SpecializationNeverRaisesRank) {
  Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    auto r = i % 2 ? fp(7, {"x", "y"}) : qq({"x", "y"});
    const Field& F = r->field();
    PolyMatrix m = random_matrix(r, rng, 1 + i % 4, 1 + (i / 3) % 4, 2, 2, 0.3);
    if (i % 5 == 0) m = m * m.transpose();
    std::vector<Scalar> pt{F.random(rng), F.random(rng)};
    ASSERT_LE(numeric_rank(evaluate_matrix(m, pt)).rank, symbolic_rank(m));
  }
}

TEST(Jacobian, Shapes) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(jacobian({P(r, "x^2"), P(r, "x*y")}), mat(r, {{"2*x", "y"}, {"0", "x"}}));
  PolyMatrix j = jacobian({P(r, "x"), P(r, "3")});
  EXPECT_TRUE(j(0, 1).is_zero() && j(1, 1).is_zero());
  EXPECT_THROW(jacobian({}), InvalidInput);
  Ideal i = rational_curve_ideal();
  PolyMatrix big = jacobian(i.generators());
  EXPECT_EQ(big.rows(), 7u);
  EXPECT_EQ(big.cols(), 12u);
  EXPECT_EQ(count_possible_minors(big.rows(), big.cols(), 4), 17325);
}
