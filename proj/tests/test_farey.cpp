#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace trisect;

namespace {

auto F(long a, long b) -> Fraction { return Fraction(a, b); }

auto permutations(const FareyTriple &t) -> std::vector<FareyTriple> {
  return {{t.x, t.y, t.z}, {t.x, t.z, t.y}, {t.y, t.x, t.z},
          {t.y, t.z, t.x}, {t.z, t.x, t.y}, {t.z, t.y, t.x}};
}

/// Cokernel of the 6 x 6 matrix whose columns are the classes of two systems.
auto pair_homology(const CurveSystem &a, const CurveSystem &b) -> CokernelInvariants {
  IntMatrix m(6, a.size() + b.size());
  std::size_t c = 0;
  for (const auto *s : {&a, &b})
    for (const auto &v : s->classes) {
      for (std::size_t i = 0; i < 6; ++i) m(i, c) = v[i];
      ++c;
    }
  return cokernel_invariants(m);
}

} // namespace

TEST(Farey, TripleKinds) {
  EXPECT_EQ(triple_kind({F(1, 1), F(1, 2), F(2, 3)}), TripleKind::FareyTriplet);
  EXPECT_EQ(triple_kind({F(0, 1), F(1, 1), F(1, 1)}), TripleKind::TwoDistinct);
  EXPECT_EQ(triple_kind({F(2, 5), F(2, 5), F(2, 5)}), TripleKind::AllEqual);
  EXPECT_EQ(triple_kind({F(0, 1), F(2, 1), F(1, 1)}), TripleKind::Invalid);
  EXPECT_EQ(triple_kind({F(1, 0), F(0, 1), F(-1, 1)}), TripleKind::FareyTriplet);
}

TEST(Farey, FormSpotValues) {
  EXPECT_EQ(qx({F(1, 1), F(1, 2), F(2, 3)}), (IntMatrix{{2, -1, 1}, {-1, 0, 0}, {1, 0, -1}}));
  EXPECT_EQ(qx({F(0, 1), F(1, 1), F(1, 1)}), (IntMatrix{{-1, -1}, {-1, 0}}));
  for (const auto &t : {FareyTriple{F(1, 2), F(1, 2), F(1, 2)}, FareyTriple{F(0, 1), F(3, 1), F(1, 1)}}) {
    try {
      qx(t);
      FAIL() << t.str();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::FormUndefined);
    }
  }
}

TEST(Farey, ClassifyExamples) {
  auto c = classify({F(1, 1), F(1, 2), F(2, 3)});
  EXPECT_EQ(c.manifold_name(), "CP2#CP2bar#CP2bar");
  EXPECT_EQ(c.form.signature, -1);
  EXPECT_EQ(classify({F(0, 1), F(1, 1), F(1, 1)}).manifold_name(), "S2~xS2");
  EXPECT_EQ(classify({F(0, 1), F(1, 2), F(1, 2)}).manifold_name(), "S2xS2");
  EXPECT_EQ(classify({F(1, 2), F(1, 2), F(1, 2)}).manifold_name(), "SpunLens(2,1)");
  EXPECT_EQ(classify({F(0, 1), F(3, 1), F(1, 1)}).manifold, FareyManifold::None);
}

TEST(Farey, Mediants) {
  auto [p, m] = mediants(F(1, 1), F(1, 2));
  EXPECT_EQ(p, F(2, 3));
  EXPECT_EQ(m, F(0, 1));
  auto [p2, m2] = mediants(F(0, 1), Fraction::infinity());
  EXPECT_EQ(p2, F(1, 1));
  EXPECT_EQ(m2, F(-1, 1));
  try {
    mediants(F(1, 1), F(1, 3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNeighbors);
  }
  for (const auto &x : bounded_slopes(4))
    for (const auto &y : bounded_slopes(4)) {
      if (abs_int(dmet(x, y)) != 1) continue;
      auto [a, b] = mediants(x, y);
      EXPECT_EQ(triple_kind({x, y, a}), TripleKind::FareyTriplet);
      EXPECT_EQ(triple_kind({x, y, b}), TripleKind::FareyTriplet);
    }
  // both completions form Farey triplets with the pair
  for (const auto &t : enumerate_triples(4)) {
    if (t.classification.kind != TripleKind::FareyTriplet) continue;
    auto [a, b] = mediants(t.triple.x, t.triple.y);
    EXPECT_TRUE(t.triple.z == a || t.triple.z == b) << t.triple.str();
  }
}

TEST(Farey, EnumerationSmallBounds) {
  // height 0: only 1/0, which pairs with itself
  auto zero = enumerate_triples(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].classification.manifold_name(), "SpunLens(0,1)");
  EXPECT_EQ(enumerate_triples(1).size(), oracle::brute_force_triple_count(1));
}

TEST(Farey, EnumerationCountMatchesBruteForce) {
  for (long n = 2; n <= 5; ++n)
    EXPECT_EQ(enumerate_triples(static_cast<std::size_t>(n)).size(), oracle::brute_force_triple_count(n))
        << n;
}

TEST(Farey, ClassificationIgnoresOrder) {
  for (const auto &row : enumerate_triples(5))
    for (const auto &p : permutations(row.triple)) {
      auto c = classify(p);
      EXPECT_EQ(c.manifold_name(), row.classification.manifold_name()) << p.str();
      EXPECT_EQ(c.refined_name(), row.classification.refined_name()) << p.str();
    }
}

TEST(Farey, FormsAreUnimodularAndMatchKind) {
  for (const auto &row : enumerate_triples(6)) {
    const auto &c = row.classification;
    if (c.kind == TripleKind::AllEqual) continue;
    const auto det = oracle::cofactor_det(c.form_matrix);
    const auto [pos, neg] = oracle::inertia(c.form_matrix);
    if (c.kind == TripleKind::TwoDistinct) {
      EXPECT_EQ(det, -1);
      EXPECT_EQ(pos - neg, 0);
    } else {
      EXPECT_EQ(abs_int(det), 1);
      EXPECT_EQ(std::abs(pos - neg), 1);
      EXPECT_TRUE(oracle::has_odd_diagonal(c.form_matrix));
      EXPECT_EQ(c.form.parity, Parity::Odd);
    }
  }
}

TEST(Farey, RefinedSplittingMatchesManifold) {
  for (const auto &row : enumerate_triples(6)) {
    const auto &c = row.classification;
    if (c.kind != TripleKind::FareyTriplet) continue;
    // T # S: S contributes signature 0, so T carries the sign
    const bool plus = c.manifold == FareyManifold::CP2_CP2_CP2bar;
    EXPECT_EQ(c.refined->first, plus ? SimpleSummand::CP2 : SimpleSummand::CP2bar) << row.triple.str();
  }
}

TEST(FareyModel, PairsAreHeegaardDiagrams) {
  for (const auto &row : enumerate_triples(5)) {
    auto d = farey_homology_model(row.triple);
    ASSERT_FALSE(has_errors(validate_diagram(d))) << row.triple.str();
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      auto h = pair_homology(d.systems[i], d.systems[j]);
      const bool same = abs_int(dmet(row.triple.at(i), row.triple.at(j))) == 0;
      EXPECT_EQ(h.free_rank, same ? 1u : 0u) << row.triple.str() << " pair " << i;
      EXPECT_TRUE(h.torsion.empty());
    }
  }
}

TEST(FareyModel, HomologyMatchesClassification) {
  for (const auto &row : enumerate_triples(6)) {
    auto h = first_homology(farey_homology_model(row.triple));
    const auto &c = row.classification;
    if (c.kind != TripleKind::AllEqual) {
      EXPECT_EQ(h.h1_str(), "0") << row.triple.str();
      continue;
    }
    if (c.lens_p == 0) {
      EXPECT_EQ(h.h1_str(), "Z");
    } else if (c.lens_p == 1) {
      EXPECT_EQ(h.h1_str(), "0");
    } else {
      EXPECT_EQ(h.h1_torsion, std::vector<Int>{c.lens_p}) << row.triple.str();
    }
  }
  try {
    farey_homology_model({F(0, 1), F(3, 1), F(1, 1)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTriple);
  }
}

TEST(FareyAtlas, CsvRows) {
  std::ostringstream os;
  write_atlas_csv(os, enumerate_triples(1));
  const auto text = os.str();
  EXPECT_EQ(text.rfind("triple,kind,manifold,refined,rank,signature,parity,det\n", 0), 0u);
  EXPECT_NE(text.find("0/1 1/1 1/0,FareyTriplet,"), std::string::npos) << text;
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            enumerate_triples(1).size() + 1);
}
