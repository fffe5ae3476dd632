#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hlgf/charge.hpp"
#include "hlgf/complex.hpp"
#include "fixtures.hpp"
#include "hlgf/continuum.hpp"
#include "hlgf/errors.hpp"

namespace hlgf {
namespace {

constexpr double kThetaF = 2.0 * kPi / 3.0;

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0], 0.0};
}
double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

// Solid angle of a spherical triangle (Van Oosterom and Strackee), independent of the library.
double spherical_area(const Point& a, const Point& b, const Point& c) {
  const double num = dot(a, cross(b, c));
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return std::abs(2.0 * std::atan2(num, den));
}

std::vector<Point> dense_loop(const std::vector<Point>& corners, int per_arc) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Point& a = corners[i];
    const Point& b = corners[(i + 1) % corners.size()];
    for (int m = 0; m < per_arc; ++m) out.push_back(slerp(a, b, static_cast<double>(m) / per_arc));
  }
  out.push_back(corners.front());
  return out;
}

TEST(RoundSphere, EquatorIsAGeodesicWithTrivialHolonomy) {
  const Point x{1, 0, 0, 0}, y{0, 1, 0, 0}, mx{-1, 0, 0, 0}, my{0, -1, 0, 0};
  const auto loop = dense_loop({x, y, mx, my}, 64);
  EXPECT_NEAR(wrap_signed(oracle_round_sphere()->transport(loop).angle()), 0.0, 1e-12);
}

TEST(RoundSphere, OctantHolonomyIsItsSphericalExcess) {
  const Point x{1, 0, 0, 0}, y{0, 1, 0, 0}, z{0, 0, 1, 0};
  const double excess = spherical_area(x, y, z);
  ASSERT_NEAR(excess, kPi / 2, 1e-15);
  const auto loop = dense_loop({x, y, z}, 50);
  EXPECT_NEAR(wrap_signed(oracle_round_sphere()->transport(loop).angle()), excess, 1e-9);
  std::vector<Point> back(loop.rbegin(), loop.rend());
  EXPECT_NEAR(wrap_signed(oracle_round_sphere()->transport(back).angle()), -excess, 1e-9);
}

TEST(Oracles, ReversalInvertsAndConcatenationMultiplies) {
  const Point a{0.6, 0.0, 0.8, 0}, b{0.0, 1.0, 0.0, 0}, c{-0.6, 0.0, -0.8, 0};
  std::vector<std::unique_ptr<TransportOracle>> oracles;
  oracles.push_back(oracle_round_sphere());
  oracles.push_back(oracle_monopole(3));
  oracles.push_back(oracle_linear_potential({{{0, 1, 0, 0}, {0, 0, 2, 0}, {0.5, 0, 0, 0}, {0, 0, 0, 0}}}));
  for (const auto& o : oracles) {
    const std::vector<Point> ab{a, slerp(a, b, 0.5), b};
    const std::vector<Point> ba{b, slerp(a, b, 0.5), a};
    const std::vector<Point> bc{b, slerp(b, c, 0.3), c};
    const std::vector<Point> abc{a, slerp(a, b, 0.5), b, slerp(b, c, 0.3), c};
    EXPECT_LE(dist(o->transport(ba), inv(o->transport(ab))), 1e-9) << o->name();
    EXPECT_LE(dist(o->transport(abc), mul(o->transport(bc), o->transport(ab))), 1e-9) << o->name();
  }
}

TEST(Oracles, ChargeZeroMonopoleHasNoHolonomy) {
  const auto o = oracle_monopole(0);
  const auto loop = dense_loop({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}}, 20);
  EXPECT_EQ(o->transport(loop).angle(), 0.0);
}

TEST(Oracles, ParseNames) {
  EXPECT_EQ(parse_oracle("monopole:-2")->name(), "monopole:-2");
  EXPECT_EQ(parse_oracle("round-sphere")->name(), "round-sphere");
  EXPECT_THROW(parse_oracle("monopole:x"), InvalidArgument);
  EXPECT_THROW(parse_oracle("monopole:9"), InvalidArgument);
  EXPECT_THROW(parse_oracle("instanton"), InvalidArgument);
}

TEST(Geometry, FaceHomotopyBoundariesAreTheEdgeSamples) {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  const int r = 32;
  const SampledGeometry g(c, builtin_embedding(c), r);
  for (const Simplex& f : c.simplices(2)) {
    const Simplex ij{f[0], f[1]}, ik{f[0], f[2]}, jk{f[1], f[2]};
    EXPECT_EQ(g.face_path(f, 0), g.edge_path(jk));
    std::vector<Point> last = g.edge_path(ik);
    const auto& rev = g.edge_path(ij);
    last.insert(last.end(), rev.rbegin() + 1, rev.rend());
    EXPECT_EQ(g.face_path(f, r), last);
  }
}

TEST(Geometry, EmbeddingsAreOnTheUnitSphereAndSlerpIsExactAtEnds) {
  for (const char* name : {"s2_five_vertex", "s2_tetra", "s3_pentachoron"}) {
    const Embedding e = builtin_embedding(build_builtin(name));
    for (const auto& [v, p] : e.positions) {
      EXPECT_NEAR(dot(p, p), 1.0, 1e-14) << name << " v" << v;
      const Point& q = e.positions.begin()->second;
      if (v == e.positions.begin()->first) continue;
      EXPECT_EQ(slerp(q, p, 0.0), q);
      EXPECT_EQ(slerp(q, p, 1.0), p);
    }
  }
}

TEST(Cutoff, RoundSphereFaceLiftsAreSignedAreas) {
  for (const char* name : {"s2_five_vertex", "s2_tetra"}) {
    const SkeletalComplex c = build_builtin(name);
    const Embedding e = builtin_embedding(c);
    const HLGF f = cutoff(*oracle_round_sphere(), c);
    for (const OrientedFace& of : oriented_faces(c)) {
      const Simplex& s = of.face;
      const double area = spherical_area(e.positions.at(s[0]), e.positions.at(s[1]), e.positions.at(s[2]));
      EXPECT_NEAR(f.face_values().at(s).lift(), of.sign * area, 1e-3) << name << " " << simplex_key(s);
    }
  }
}

// Edge angles of the round cutoff as multiples of theta_f; frozen from a run of the oracle.
TEST(Cutoff, RoundSphereEdgeTable) {
  const std::map<Simplex, int> n{{{1, 2}, 2}, {{1, 3}, 1}, {{1, 4}, 0}, {{1, 5}, 2}, {{2, 3}, 2},
                                 {{2, 4}, 0}, {{2, 5}, 1}, {{3, 4}, 0}, {{3, 5}, 0}};
  const HLGF f = cutoff(*oracle_round_sphere(), build_builtin("s2_five_vertex"));
  for (const auto& [e, k] : n) {
    EXPECT_LE(dist(f.edge_values().at(e), GroupElement::u1(k * kThetaF)), 1e-6) << simplex_key(e);
  }
}

TEST(Cutoff, MonopoleChargeMatchesTransitionWinding) {
  for (int n = -3; n <= 3; ++n) {
    // Winding of exp(i n phi) once around the equator.
    double total = 0.0;
    const int steps = 360;
    for (int m = 0; m < steps; ++m) {
      total += wrap_signed(n * kTwoPi * (m + 1) / steps - n * kTwoPi * m / steps);
    }
    const auto winding = static_cast<std::int64_t>(std::lround(total / kTwoPi));
    for (const char* name : {"s2_five_vertex", "s2_tetra"}) {
      const HLGF f = cutoff(*oracle_monopole(n), build_builtin(name), testing::at_resolution(64));
      EXPECT_EQ(topological_charge(f).value, Pi1Element::u1(winding)) << name << " n=" << n;
    }
  }
}

TEST(Cutoff, GaugeChoiceDoesNotChangeTheCharge) {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  CutoffOptions options;
  options.resolution = 64;
  options.gauge = random_gauge(c, Backend::kU1, 8);
  const HLGF f = cutoff(*oracle_monopole(2), c, options);
  EXPECT_EQ(topological_charge(f).value, Pi1Element::u1(2));
  const HLGF z = cutoff(*oracle_monopole(0), c, testing::at_resolution(64));
  EXPECT_TRUE(topological_charge(z).value.is_zero());
}

TEST(Cutoff, CurvedGlobalPotentialPassesOnThePentachoron) {
  const std::array<std::array<double, 4>, 4> m{
      {{0, 0.7, -0.2, 0.4}, {-0.7, 0, 0.5, 0.1}, {0.2, -0.5, 0, 0.9}, {-0.4, -0.1, -0.9, 0}}};
  const SkeletalComplex c = build_builtin("s3_pentachoron");
  const HLGF f = cutoff(*oracle_linear_potential(m), c, testing::at_resolution(64));
  double largest = 0.0;
  for (const auto& [s, l] : f.face_values()) largest = std::max(largest, std::abs(l.lift()));
  EXPECT_GT(largest, 0.1);
  EXPECT_TRUE(check_consistency(f).ok());
  EXPECT_TRUE(check_consistency(cutoff(*oracle_trivial(), c)).ok());
}

TEST(Cutoff, EmbeddedSO3RoundSphereHasTrivialSecondClass) {
  const std::shared_ptr<const TransportOracle> base = oracle_round_sphere();
  const HLGF f = cutoff(*oracle_embedded_so3(base), build_builtin("s2_five_vertex"), testing::at_resolution(64));
  EXPECT_EQ(f.backend(), Backend::kSO3);
  // Q = 2 maps to 2 mod 2 in pi1(SO3).
  EXPECT_TRUE(topological_charge(f).value.is_zero());
  const HLGF odd = cutoff(*oracle_embedded_so3(std::shared_ptr<const TransportOracle>(oracle_monopole(1))),
                          build_builtin("s2_tetra"), testing::at_resolution(64));
  EXPECT_EQ(topological_charge(odd).value, Pi1Element::so3(-1));
}

TEST(Cutoff, PhaseGuardAndResolutionLimits) {
  const SkeletalComplex c = build_builtin("s2_five_vertex");
  CutoffOptions tight;
  tight.resolution = 16;
  tight.max_phase_step = 1e-4;
  EXPECT_THROW(cutoff(*oracle_round_sphere(), c, tight), LiftAmbiguityError);
  EXPECT_THROW(cutoff(*oracle_round_sphere(), c, testing::at_resolution(8)), InvalidArgument);
}

TEST(Tracking, FullRotationIsTheNonContractibleClass) {
  std::vector<Quaternion> once, twice;
  const int r = 256;
  for (int m = 0; m <= r; ++m) {
    once.push_back(Quaternion::axis_angle({0.0, 0.6, 0.8}, kTwoPi * m / r));
    twice.push_back(Quaternion::axis_angle({0.0, 0.6, 0.8}, 2 * kTwoPi * m / r));
  }
  EXPECT_EQ(pi1_class(track_so3_lift(once), 1e-9), Pi1Element::so3(-1));
  EXPECT_EQ(pi1_class(track_so3_lift(twice), 1e-9), Pi1Element::so3(1));
}

TEST(Tracking, U1LiftUnwrapsAndGuardsJumps) {
  std::vector<double> angles;
  for (int m = 0; m <= 100; ++m) angles.push_back(wrap_angle(3 * kTwoPi * m / 100));
  EXPECT_NEAR(track_u1_lift(angles).lift(), 3 * kTwoPi, 1e-12);
  EXPECT_THROW(track_u1_lift(std::vector<double>{0.0, 2.0}), LiftAmbiguityError);
}

}  // namespace
}  // namespace hlgf
