#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace trisect;

namespace {

auto P(const char *s) -> TrisectionParams { return TrisectionParams::parse(s); }

template <class F> auto code_of(F &&f) -> std::optional<ErrorCode> {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

auto random_sl2(std::mt19937_64 &g) -> IntMatrix {
  IntMatrix m = IntMatrix::identity(2);
  const auto steps = oracle::uniform(g, 0, 6);
  for (long s = 0; s < steps; ++s) {
    const auto k = oracle::uniform(g, -4, 4);
    m = m * (s % 2 == 0 ? IntMatrix{{1, k}, {0, 1}} : IntMatrix{{1, 0}, {k, 1}});
  }
  return m;
}

auto with_bridge(const char *p, const char *b) -> TrisectionParams {
  auto out = P(p);
  out.bridge = parse_bridge(b);
  return out;
}

} // namespace

TEST(Paste, ThickenedTorusPieces) {
  // two genus-1 pieces with three boundary circles each
  TrisectionParams half{1, {0, 0, 0}, 3, std::nullopt};
  EXPECT_EQ(paste({half, half, BoundaryCircles{3, std::nullopt}}).genus, 4);
  auto r = paste({half, half, BoundaryCircles{3, std::array<std::int64_t, 3>{2, 2, 2}}});
  EXPECT_EQ(r.str(), "4;2,2,2");
}

TEST(Paste, ClosedPageAndSingleCircle) {
  auto zero = P("0;0,0,0");
  EXPECT_EQ(paste({zero, zero, ClosedPage{0}}), (PastedParams{2, std::array<std::int64_t, 3>{0, 0, 0}}));
  EXPECT_EQ(paste({P("1;1,0,0"), P("2;1,1,1"), ClosedPage{1}}).str(), "5;4,3,3");
  auto disk = P("0;0,0,0;1");
  EXPECT_EQ(paste({disk, disk, BoundaryCircles{1, std::nullopt}}).genus, 0);
}

TEST(Paste, ModeErrors) {
  auto closed = P("1;0,0,0");
  auto three = P("1;0,0,0;3");
  EXPECT_EQ(code_of([&] { paste({three, closed, ClosedPage{0}}); }), ErrorCode::ModeMismatch);
  EXPECT_EQ(code_of([&] { paste({three, closed, BoundaryCircles{3, std::nullopt}}); }),
            ErrorCode::ModeMismatch);
  EXPECT_EQ(code_of([&] { paste({three, three, BoundaryCircles{2, std::nullopt}}); }),
            ErrorCode::ModeMismatch);
  EXPECT_EQ(code_of([&] { paste({closed, closed, BoundaryCircles{0, std::nullopt}}); }),
            ErrorCode::ModeMismatch);
}

TEST(Paste, EulerCharacteristicOfSurfaces) {
  // chi(glued) = chi(left) + chi(right) for circle gluing
  for (std::int64_t g = 0; g < 4; ++g)
    for (std::int64_t h = 0; h < 4; ++h)
      for (std::int64_t n = 1; n < 5; ++n) {
        TrisectionParams l{g, {0, 0, 0}, n, std::nullopt}, r{h, {0, 0, 0}, n, std::nullopt};
        const auto out = paste({l, r, BoundaryCircles{n, std::nullopt}});
        EXPECT_EQ(2 - 2 * out.genus, (2 - 2 * g - n) + (2 - 2 * h - n));
      }
}

TEST(FiberSum, ReproducesKnownChain) {
  auto piece = with_bridge("21;6,6,11", "5;1,1,1");
  auto sum = fiber_sum(piece, piece);
  EXPECT_EQ(sum.str(), "51;13,13,23");
  auto reduced = destabilize(sum, 3, 10);
  EXPECT_EQ(reduced.str(), "41;13,13,13");
  EXPECT_EQ(euler_char(reduced), 4);
}

TEST(FiberSum, ErrorsAndSymmetry) {
  auto a = with_bridge("3;1,1,2", "2;1,0,1");
  auto b = with_bridge("4;2,1,1", "2;1,0,1");
  EXPECT_EQ(fiber_sum(a, b), fiber_sum(b, a));
  EXPECT_EQ(fiber_sum(a, b).str(), "10;4,2,4");
  EXPECT_EQ(code_of([&] { fiber_sum(a, with_bridge("4;2,1,1", "3;1,0,1")); }),
            ErrorCode::CellDecompositionMismatch);
  EXPECT_EQ(code_of([&] { fiber_sum(a, P("4;2,1,1")); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([&] { fiber_sum(a, with_bridge("4;2,1,1;1", "2;1,0,1")); }),
            ErrorCode::BoundaryNotSupported);
}

TEST(Destabilize, Rules) {
  EXPECT_EQ(destabilize(P("3;1,2,3"), 3, 0).str(), "3;1,2,3");
  EXPECT_EQ(destabilize(P("1;0,0,1"), 3, 1).str(), "0;0,0,0");
  EXPECT_EQ(code_of([] { destabilize(P("3;1,2,3"), 1, 2); }), ErrorCode::CannotDestabilize);
  // the result would have k_3 = 3 > g = 2
  EXPECT_EQ(code_of([] { destabilize(P("3;1,3,3"), 1, 1); }), ErrorCode::CannotDestabilize);
  EXPECT_EQ(code_of([] { destabilize(P("3;1,2,3"), 4, 1); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { destabilize(P("3;1,2,3"), 1, -1); }), ErrorCode::InvalidParams);
  // destabilizing keeps Euler characteristic
  for (std::int64_t t = 0; t <= 3; ++t) {
    auto p = P("6;2,3,6");
    EXPECT_EQ(euler_char(destabilize(p, 3, t)), euler_char(p));
  }
}

TEST(Poke, ShapesAndDiagrams) {
  StarShape torus{1, 0, {0, 0, 0}};
  EXPECT_EQ(poke(torus, {1, 1, 1}), (StarShape{1, 3, {1, 1, 1}}));
  EXPECT_EQ(poke(torus, {2, 0, 1}), (StarShape{1, 3, {2, 0, 1}}));
  auto d = parse_diagram(oracle::read_text(oracle::data_path("torus_empty.json")));
  auto poked = poke(d, {1, 1, 1});
  EXPECT_EQ(shape_of(poked), (StarShape{1, 3, {1, 1, 1}}));
  EXPECT_EQ(poked.alpha().classes[0], (HomologyVector{0, 0}));
  EXPECT_EQ(code_of([&] { poke(torus, {-1, 0, 0}); }), ErrorCode::InvalidParams);
}

TEST(CurveComplement, Counts) {
  auto s1s3 = shape_of(parse_diagram(oracle::read_text(oracle::data_path("s1xs3.json"))));
  EXPECT_EQ(curve_complement(s1s3, {1, 1, 1}), (StarShape{1, 3, {2, 2, 2}}));
  EXPECT_EQ(curve_complement(StarShape{2, 0, {2, 2, 2}}, {2, 2, 2}), (StarShape{2, 6, {6, 6, 6}}));
  EXPECT_EQ(curve_complement(StarShape{1, 3, {1, 1, 1}}, {1, 1, 1}), (StarShape{1, 6, {3, 3, 3}}));
  EXPECT_EQ(code_of([&] { curve_complement(s1s3, {1, 2, 1}); }), ErrorCode::UnequalArcs);
  for (std::int64_t g = 0; g < 5; ++g) EXPECT_EQ(surgery_closure_genus(StarShape{g, 0, {g, g, g}}), g + 2);
  EXPECT_EQ(code_of([] { surgery_closure_genus(StarShape{1, 1, {1, 1, 1}}); }),
            ErrorCode::BoundaryNotSupported);
}

TEST(RibbonGraph, SmallExamples) {
  RibbonGraph edge;
  edge.add_vertex();
  edge.add_vertex();
  edge.add_edge(0, 1);
  auto s = shadow_boundary_curves(edge);
  EXPECT_EQ(s.boundary_parallel, 1u);
  EXPECT_EQ(s.essential, 0u);

  RibbonGraph loop({{0, 1}});
  EXPECT_EQ(loop.faces().size(), 2u);
  auto l = shadow_boundary_curves(loop);
  EXPECT_EQ(l.boundary_parallel, 0u);
  EXPECT_EQ(l.essential, 2u);

  RibbonGraph planar_theta({{0, 2, 4}, {5, 3, 1}});
  EXPECT_EQ(planar_theta.faces().size(), 3u);
  EXPECT_EQ(shadow_boundary_curves(planar_theta).component_genus, std::vector<std::int64_t>{0});
  RibbonGraph toral_theta({{0, 2, 4}, {1, 3, 5}});
  EXPECT_EQ(toral_theta.faces().size(), 1u);
  EXPECT_EQ(shadow_boundary_curves(toral_theta).component_genus, std::vector<std::int64_t>{1});

  RibbonGraph point;
  point.add_vertex();
  EXPECT_EQ(shadow_boundary_curves(point).boundary_parallel, 1u);

  EXPECT_EQ(code_of([] { RibbonGraph({{0, 1}, {2}}); }), ErrorCode::DanglingDart);
  EXPECT_EQ(code_of([] { RibbonGraph({{0, 0}}); }), ErrorCode::DanglingDart);
}

TEST(RibbonGraph, FacesMatchPermutationOracle) {
  auto g = oracle::rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = static_cast<std::size_t>(oracle::uniform(g, 1, 6));
    const auto e = static_cast<std::size_t>(oracle::uniform(g, 0, 8));
    std::vector<std::vector<std::size_t>> rot(v);
    for (std::size_t k = 0; k < e; ++k) {
      rot[static_cast<std::size_t>(oracle::uniform(g, 0, static_cast<long>(v) - 1))].push_back(2 * k);
      rot[static_cast<std::size_t>(oracle::uniform(g, 0, static_cast<long>(v) - 1))].push_back(2 * k + 1);
    }
    for (auto &r : rot) std::shuffle(r.begin(), r.end(), g);
    RibbonGraph rg(rot);
    std::size_t faces = 0;
    for (const auto &f : rg.faces())
      if (!f.empty()) ++faces;
    for (const auto &r : rot)
      if (r.empty()) ++faces;
    ASSERT_EQ(faces, oracle::face_count(rot));
    auto s = shadow_boundary_curves(rg);
    EXPECT_EQ(s.total(), faces);
    std::int64_t genus_sum = 0;
    for (auto h : s.component_genus) genus_sum += h;
    // V - E + F = 2 * components - 2 * sum of genera
    EXPECT_EQ(static_cast<std::int64_t>(v) - static_cast<std::int64_t>(e) + static_cast<std::int64_t>(faces),
              2 * static_cast<std::int64_t>(s.component_genus.size()) - 2 * genus_sum);
  }
}

TEST(SurgeryPlan, IdentityAndLuttinger) {
  auto id = surgery_plan_general(IntMatrix::identity(3));
  EXPECT_EQ(id.blocks.size(), 3u);
  EXPECT_EQ(id.composite, IntMatrix::identity(3));
  for (long m = -10; m <= 10; ++m)
    for (long n = -10; n <= 10; ++n) {
      auto plan = luttinger_plan(m, n);
      oracle::M3 prod{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
      for (const auto &b : plan.blocks) prod = oracle::mul(prod, oracle::to_m3(b.matrix()));
      EXPECT_EQ(prod, (oracle::M3{{{1, 0, m}, {0, 1, n}, {0, 0, 1}}}));
    }
  EXPECT_EQ(luttinger_plan(0, 0).blocks.size(), 9u);
}

TEST(SurgeryPlan, LogTransforms) {
  auto zero = log_transform_plan(IntMatrix{{0, 1}, {-1, 0}});
  EXPECT_EQ(zero.blocks.size(), 4u);
  EXPECT_EQ(zero.blocks[2].str(), "TAU23 INV");
  auto g = oracle::rng(32);
  std::vector<IntMatrix> inputs;
  for (long p = -5; p <= 5; ++p) inputs.push_back(IntMatrix{{0, 1}, {-1, p}});
  for (int i = 0; i < 100; ++i) inputs.push_back(random_sl2(g));
  for (const auto &a : inputs) {
    auto plan = log_transform_plan(a);
    const auto c = oracle::to_m3(plan.composite);
    EXPECT_EQ(c, (oracle::M3{{{1, 0, 0},
                              {0, static_cast<long long>(a(0, 0)), static_cast<long long>(a(0, 1))},
                              {0, static_cast<long long>(a(1, 0)), static_cast<long long>(a(1, 1))}}}))
        << a;
  }
  EXPECT_EQ(code_of([] { log_transform_plan(IntMatrix{{2, 0}, {0, 1}}); }), ErrorCode::NotSL3);
}

TEST(SurgeryPlan, GeneralRoundTrip) {
  auto g = oracle::rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = oracle::random_sl3(g, static_cast<int>(oracle::uniform(g, 0, 30)));
    auto plan = surgery_plan_general(m);
    EXPECT_EQ(plan.product(), m);
    EXPECT_EQ(parse_plan(plan.str()), plan);
  }
  EXPECT_EQ(code_of([] { surgery_plan_general(IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }),
            ErrorCode::NotSL3);
}

TEST(SurgeryPlan, ParseErrors) {
  auto text = luttinger_plan(2, 3).str();
  EXPECT_EQ(parse_plan(text).composite, (IntMatrix{{1, 0, 2}, {0, 1, 3}, {0, 0, 1}}));
  auto bad = text;
  bad.replace(bad.find("COMPOSITE"), std::string::npos, "COMPOSITE 1 0 0 0 1 0 0 0 1\n");
  EXPECT_EQ(code_of([&] { parse_plan(bad); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_plan("TAU0\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_plan("TAU44\nCOMPOSITE 1 0 0 0 1 0 0 0 1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_plan("SHEAR 2 0 0 1\nCOMPOSITE 2 0 0 0 1 0 0 0 1\n"); }),
            ErrorCode::NotSL3);
}
