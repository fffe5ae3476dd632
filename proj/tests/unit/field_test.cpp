#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "hlgf/complex.hpp"
#include "hlgf/errors.hpp"
#include "hlgf/field.hpp"
#include "hlgf/parser.hpp"
#include "hlgf/sweep.hpp"

namespace hlgf {
namespace {

constexpr double kThetaF = 2.0 * kPi / 3.0;

// Round-sphere data written out by hand: edge angles n_ij * theta_f, face lifts eps_f * theta_f.
HLGF round_field() {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  const std::map<Simplex, int> n{{{1, 2}, 2}, {{1, 3}, 1}, {{1, 4}, 0}, {{1, 5}, 2}, {{2, 3}, 2},
                                 {{2, 4}, 0}, {{2, 5}, 1}, {{3, 4}, 0}, {{3, 5}, 0}};
  std::map<Simplex, GroupElement> edges;
  for (const auto& [e, k] : n) edges.emplace(e, GroupElement::u1(k * kThetaF));
  std::map<Simplex, LoopClass> faces;
  for (const OrientedFace& f : oriented_faces(c)) {
    const Simplex& s = f.face;
    faces.emplace(s, LoopClass::u1(edges.at({s[1], s[2]}).angle(), f.sign * kThetaF));
  }
  return new_field(c, Backend::kU1, edges, faces, std::nullopt, FieldOptions{1e-9});
}

TEST(NewField, RoundSphereDataIsValid) {
  const HLGF f = round_field();
  EXPECT_TRUE(check_consistency(f).ok());
  EXPECT_EQ(f.face_values().size(), 6u);
}

TEST(NewField, IdentityFieldIsValid) {
  for (const char* name : {"s2_five_vertex", "s2_tetra", "s3_pentachoron"}) {
    const HLGF f = identity_field(build_builtin(name), Backend::kSO3);
    EXPECT_TRUE(check_consistency(f).ok()) << name;
  }
}

TEST(NewField, FaceLiftOffByNonMultipleOfTwoPiBreaksFaceCompatibility) {
  const HLGF f = round_field();
  auto faces = f.face_values();
  const LoopClass old = faces.at({1, 3, 5});
  faces.insert_or_assign(Simplex{1, 3, 5}, LoopClass::u1(old.base(), kThetaF + 0.1));
  try {
    new_field(f.complex(), Backend::kU1, f.edge_values(), faces);
    FAIL() << "expected a face-compatibility failure";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("135"), std::string::npos) << e.what();
  }
}

TEST(NewField, MissingAndExtraDataAreRejected) {
  const HLGF f = round_field();
  auto edges = f.edge_values();
  edges.erase({1, 2});
  EXPECT_THROW(new_field(f.complex(), Backend::kU1, edges, f.face_values()), ValidationError);
  auto faces = f.face_values();
  faces.emplace(Simplex{1, 4, 5}, LoopClass::u1(0.0, 0.0));
  EXPECT_THROW(new_field(f.complex(), Backend::kU1, f.edge_values(), faces), ValidationError);
  auto mixed = f.edge_values();
  mixed.insert_or_assign(Simplex{1, 2}, id(Backend::kSO3));
  EXPECT_THROW(new_field(f.complex(), Backend::kU1, mixed, f.face_values()), ValidationError);
}

TEST(Evaluate, CoveringWordOfRoundDataHasLiftFourPi) {
  const HLGF f = round_field();
  EXPECT_NEAR(evaluate_loop(f, covering_word(f.complex())).lift(), 4 * kPi, 1e-12);
}

TEST(Evaluate, SweepPieceHasLiftTwoThetaF) {
  const HLGF f = round_field();
  const SkeletalComplex& c = f.complex();
  EXPECT_NEAR(evaluate_loop(f, parse_word("inv0(G235) o0 G234", c)).lift(), 2 * kThetaF, 1e-12);
  EXPECT_NEAR(evaluate_loop(f, parse_word("inv0(G135) o0 G134", c)).lift(), -2 * kThetaF, 1e-12);
}

TEST(Evaluate, IdentityFieldGivesIdentities) {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  const HLGF f = identity_field(c, Backend::kU1);
  const LoopClass l = evaluate_loop(f, parse_word("inv0(G135) o0 G134", c));
  EXPECT_EQ(l.lift(), 0.0);
  EXPECT_EQ(l.base(), 0.0);
  EXPECT_EQ(evaluate_path(f, parse_word("G12 o0 G23", c)).angle(), 0.0);
}

TEST(Evaluate, DimensionMismatchIsReported) {
  const HLGF f = round_field();
  EXPECT_THROW(evaluate_loop(f, parse_word("G12", f.complex())), InvalidArgument);
  EXPECT_THROW(evaluate_path(f, parse_word("G124", f.complex())), InvalidArgument);
}

TEST(Evaluate, ConcurrentEvaluationAgrees) {
  const HLGF f = random_field(build_builtin("s2_five_vertex"), Backend::kSO3, 9);
  const GlobeWord w = covering_word(f.complex());
  const LoopClass want = evaluate_loop(f, w);
  std::vector<std::thread> threads;
  std::vector<int> same(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { same[t] = loop_equal(evaluate_loop(f, w), want, 0.0); });
  }
  for (auto& th : threads) th.join();
  for (int s : same) EXPECT_TRUE(s);
}

TEST(Gauge, ConstantGaugeFixesTheIdentityField) {
  const SkeletalComplex c = build_builtin("s2_tetra");
  const HLGF f = identity_field(c, Backend::kSO3);
  GaugeAssignment g;
  for (VertexId v : c.vertices()) g.emplace(v, GroupElement::so3(Quaternion::axis_angle({0, 1, 0}, 0.7)));
  const HLGF h = gauge_transform(f, g);
  for (const auto& [e, x] : h.edge_values()) EXPECT_LE(dist(x, id(Backend::kSO3)), 1e-12);
}

TEST(Gauge, U1LiftsAreUnchanged) {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  const HLGF f = random_field(c, Backend::kU1, 2);
  const HLGF h = gauge_transform(f, random_gauge(c, Backend::kU1, 3));
  for (const auto& [s, l] : f.face_values()) EXPECT_NEAR(h.face_values().at(s).lift(), l.lift(), 1e-12);
}

TEST(Gauge, TransformedSO3FieldsStayValid) {
  for (const char* name : {"s2_five_vertex", "s3_pentachoron"}) {
    const SkeletalComplex c = build_builtin(name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const HLGF h = gauge_transform(random_field(c, Backend::kSO3, seed), random_gauge(c, Backend::kSO3, seed + 100));
      EXPECT_NO_THROW(new_field(h.complex(), h.backend(), h.edge_values(), h.face_values()));
    }
  }
}

TEST(Gauge, TrivializationChangeIsAGaugeTransformation) {
  const SkeletalComplex c = build_builtin("s2_tetra");
  const HLGF f = random_field(c, Backend::kSO3, 5);
  const GaugeAssignment g = random_gauge(c, Backend::kSO3, 6);
  const HLGF a = gauge_transform(f, g);
  const HLGF b = change_trivialization(f, g);
  for (const auto& [s, x] : a.edge_values()) EXPECT_LE(dist(x, b.edge_values().at(s)), 1e-15);
}

TEST(Gauge, IncompleteAssignmentIsRejected) {
  const SkeletalComplex c = build_builtin("s2_tetra");
  EXPECT_THROW(gauge_transform(identity_field(c, Backend::kU1), {{1, GroupElement::u1(1.0)}}), InvalidArgument);
}

TEST(Consistency, IdentityOnSurfaceHasEmptyReport) {
  EXPECT_TRUE(check_consistency(identity_field(build_builtin("s2_five_vertex"), Backend::kU1)).ok());
}

TEST(Consistency, ShiftedFaceFlagsItsTwoTetrahedra) {
  const SkeletalComplex c = build_builtin("s3_pentachoron");
  const HLGF f = identity_field(c, Backend::kU1);
  auto faces = f.face_values();
  faces.insert_or_assign(Simplex{2, 3, 5}, LoopClass::u1(0.0, kTwoPi));
  const ConsistencyReport r = check_consistency(new_field(c, Backend::kU1, f.edge_values(), faces));
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].simplex, (Simplex{1, 2, 3, 5}));
  EXPECT_EQ(r.violations[1].simplex, (Simplex{2, 3, 4, 5}));
  for (const Violation& v : r.violations) {
    EXPECT_EQ(v.condition, Violation::Condition::kExtendibility);
    EXPECT_NEAR(v.residual, kTwoPi, 1e-12);
    ASSERT_TRUE(v.pi1.has_value());
    EXPECT_EQ(std::abs(v.pi1->value()), 1);
  }
}

TEST(RandomField, SameSeedSameField) {
  const SkeletalComplex c = build_builtin("s2_tetra");
  for (Backend b : {Backend::kU1, Backend::kSO3, Backend::kSU2}) {
    const HLGF x = random_field(c, b, 42);
    const HLGF y = random_field(c, b, 42);
    for (const auto& [s, l] : x.face_values()) EXPECT_TRUE(loop_equal(l, y.face_values().at(s), 0.0));
  }
}

}  // namespace
}  // namespace hlgf
