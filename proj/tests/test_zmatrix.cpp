#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace trisect;

namespace {

auto is_unimodular(const IntMatrix &m) -> bool { return abs_int(determinant(m)) == 1; }

void expect_smith_shape(const IntMatrix &s) {
  const std::size_t r = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j) {
        ASSERT_EQ(s(i, j), 0);
      }
  for (std::size_t i = 0; i < r; ++i) {
    ASSERT_GE(s(i, i), 0);
    if (i + 1 >= r) continue;
    const Int next = s(i, i) == 0 ? s(i + 1, i + 1) : Int(s(i + 1, i + 1) % s(i, i));
    ASSERT_EQ(next, 0);
  }
}

} // namespace

TEST(Determinant, MatchesCofactorExpansion) {
  auto g = oracle::rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(g, 0, 6));
    auto m = oracle::random_matrix(g, n, n, -9, 9);
    EXPECT_EQ(determinant(m), oracle::cofactor_det(m)) << m;
  }
}

TEST(Determinant, EmptyIsOne) { EXPECT_EQ(determinant(IntMatrix(0, 0)), 1); }

TEST(Smith, DiagonalExample) {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.U * m * snf.V, snf.S);
  EXPECT_EQ(snf.S, (IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
}

TEST(Smith, RandomIdentityAndUnimodularity) {
  auto g = oracle::rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(oracle::uniform(g, 1, 8));
    const auto c = static_cast<std::size_t>(oracle::uniform(g, 1, 8));
    auto m = oracle::random_matrix(g, r, c, -50, 50);
    auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.U * m * snf.V, snf.S) << m;
    ASSERT_TRUE(is_unimodular(snf.U));
    ASSERT_TRUE(is_unimodular(snf.V));
    expect_smith_shape(snf.S);
  }
}

TEST(Smith, MatchesDeterminantalDivisors) {
  auto g = oracle::rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(oracle::uniform(g, 1, 4));
    const auto c = static_cast<std::size_t>(oracle::uniform(g, 1, 4));
    // low rank and small entries make nontrivial factors likely
    auto m = oracle::random_matrix(g, r, c, -6, 6);
    if (trial % 3 == 0) m = m * oracle::random_matrix(g, c, c, -2, 2);
    auto snf = smith_normal_form(m);
    const auto expect = oracle::invariant_factors(m);
    std::vector<Int> got;
    for (std::size_t i = 0; i < std::min(r, c); ++i)
      if (snf.S(i, i) != 0) got.push_back(snf.S(i, i));
    EXPECT_EQ(got, expect) << m;
  }
}

TEST(Cokernel, TorsionAndRank) {
  IntMatrix m{{2, 0}, {0, 3}, {0, 0}};
  auto c = cokernel_invariants(m);
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_EQ(c.torsion, std::vector<Int>{6});
  EXPECT_EQ(cokernel_invariants(IntMatrix(2, 0)).free_rank, 2u);
}

TEST(Forms, HyperbolicAndDiagonalFixedPoints) {
  auto h = classify_unimodular(IntMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(h.parity, Parity::Even);
  EXPECT_EQ(h.signature, 0);
  EXPECT_EQ(h.name, FormName::EvenIndefinite);
  EXPECT_EQ(h.hyperbolic, 1u);

  auto d = classify_unimodular(IntMatrix{{1, 0}, {0, -1}});
  EXPECT_EQ(d.parity, Parity::Odd);
  EXPECT_EQ(d.signature, 0);
  EXPECT_EQ(d.name, FormName::OddIndefinite);
  EXPECT_EQ(d.p, 1u);
  EXPECT_EQ(d.q, 1u);
}

TEST(Forms, Errors) {
  EXPECT_THROW(sym_form_invariants(IntMatrix{{0, 1}, {2, 0}}), Error);
  try {
    classify_unimodular(IntMatrix{{2, 0}, {0, 1}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
  EXPECT_EQ(classify_unimodular(IntMatrix(0, 0)).name, FormName::ZeroForm);
  EXPECT_EQ(classify_unimodular(IntMatrix{{0}}).name, FormName::Unclassified);
}

TEST(Forms, InertiaMatchesCharacteristicPolynomial) {
  auto g = oracle::rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(g, 1, 6));
    auto a = oracle::random_matrix(g, n, n, -5, 5);
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = a(i, j) + a(j, i);
    if (trial % 4 == 0) q = a * a.transpose(); // semidefinite, often singular
    auto inv = sym_form_invariants(q);
    auto [pos, neg] = oracle::inertia(q);
    EXPECT_EQ(inv.rank, static_cast<std::size_t>(pos + neg)) << q;
    EXPECT_EQ(inv.signature, pos - neg) << q;
    EXPECT_EQ(inv.parity == Parity::Odd, oracle::has_odd_diagonal(q));
  }
}

TEST(Forms, CongruenceInvariance) {
  auto g = oracle::rng(5);
  const std::vector<IntMatrix> forms{
      IntMatrix{{0, 1}, {1, 0}},
      IntMatrix{{1, 0}, {0, -1}},
      IntMatrix{{2, -1, 1}, {-1, 0, 0}, {1, 0, -1}},
      IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}},
      IntMatrix{{2, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 3}},
  };
  for (const auto &q : forms) {
    const auto base = sym_form_invariants(q);
    for (int trial = 0; trial < 100; ++trial) {
      auto p = oracle::random_unimodular(g, q.rows());
      auto moved = p.transpose() * q * p;
      ASSERT_EQ(sym_form_invariants(moved), base) << moved;
    }
  }
}

TEST(Sl3, FactorsRandomProducts) {
  auto g = oracle::rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = oracle::random_sl3(g, static_cast<int>(oracle::uniform(g, 0, 30)));
    auto w = sl3_factor(m);
    EXPECT_EQ(w.product(), m);
  }
}

TEST(Sl3, Generators) {
  EXPECT_EQ((Sl3Factor{Sl3Gen::Sigma23, 0}.matrix()), (IntMatrix{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ((Sl3Factor{Sl3Gen::Sigma31, 0}.matrix()), (IntMatrix{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}));
  EXPECT_EQ((Sl3Factor{Sl3Gen::Shear, 4}.matrix()), (IntMatrix{{1, 4, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (int k = 0; k < 7; ++k) {
    Sl3Factor f{static_cast<Sl3Gen>(k), 3};
    EXPECT_EQ(f.matrix() * f.inverse().matrix(), IntMatrix::identity(3));
  }
  EXPECT_TRUE(sl3_factor(IntMatrix::identity(3)).factors.empty());
}

TEST(Sl3, RejectsNonSl3) {
  try {
    sl3_factor(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSL3);
  }
  EXPECT_THROW(sl3_factor(IntMatrix::identity(2)), Error);
}
