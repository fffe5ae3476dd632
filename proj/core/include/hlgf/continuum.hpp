#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlgf/complex.hpp"
#include "hlgf/field.hpp"
#include "hlgf/gauge_group.hpp"

namespace hlgf {

// Point of R^4; 2-sphere embeddings leave the last coordinate zero.
using Point = std::array<double, 4>;

struct Embedding {
  std::map<VertexId, Point> positions;
  int ambient_dim;
  // Root of the transport tree used by TrivializationConvention::kTreeTransport.
  VertexId frame_root;
};

// Unit-sphere embeddings of the built-in complexes, matched on name and simplices.
Embedding builtin_embedding(const SkeletalComplex& c);

// Great-circle interpolation; exact at t = 0 and t = 1.
Point slerp(const Point& a, const Point& b, double t);

enum class TrivializationConvention {
  // Vertex frames are the oracle's own reference frames.
  kReferenceFrames,
  // Frames carried from the embedding's root along a BFS tree whose parent is the
  // largest-id neighbour one layer closer to the root.
  kTreeTransport,
};

// A continuum connection presented through numeric parallel transport.
class TransportOracle {
 public:
  virtual ~TransportOracle() = default;
  virtual Backend backend() const = 0;
  virtual std::string name() const = 0;
  virtual TrivializationConvention convention() const {
    return TrivializationConvention::kReferenceFrames;
  }
  // Transport along the piecewise great-circle path through the points, expressed
  // in the oracle's reference frames at the two ends. Needs at least one point.
  virtual GroupElement transport(std::span<const Point> path) const = 0;
};

// Levi-Civita connection on unit tangent vectors of the round 2-sphere.
std::unique_ptr<TransportOracle> oracle_round_sphere();
// U(1) monopole of charge n, |n| <= 8, with hemisphere charts meeting at z = 0.
std::unique_ptr<TransportOracle> oracle_monopole(int n);
std::unique_ptr<TransportOracle> oracle_trivial();
// Global U(1) potential A = sum_ab m[a][b] x_a dx_b on R^4; curvature from the antisymmetric part.
std::unique_ptr<TransportOracle> oracle_linear_potential(const std::array<std::array<double, 4>, 4>& m);
// SO(3) connection obtained by rotating about the z axis by the U(1) phase of base.
std::unique_ptr<TransportOracle> oracle_embedded_so3(std::shared_ptr<const TransportOracle> base);
// "round-sphere", "monopole:<n>", "trivial".
std::unique_ptr<TransportOracle> parse_oracle(std::string_view name);

// Sampled standard parametrizations of the simplices of paths.
class SampledGeometry {
 public:
  SampledGeometry(const SkeletalComplex& c, const Embedding& e, int resolution);

  int resolution() const noexcept { return resolution_; }
  // r+1 samples of the generator path for edge [i,j], running from v_j to v_i.
  const std::vector<Point>& edge_path(const Simplex& edge) const;
  // Sample n (0..r) of the homotopy for face [i,j,k]: the path v_k -> x -> v_j where x
  // runs along [i,j] from v_j to v_i. Sample 0 is the [j,k] edge path; sample r is the
  // [i,k] edge path followed by the reversed [i,j] edge path.
  std::vector<Point> face_path(const Simplex& face, int n) const;

 private:
  int resolution_;
  std::map<VertexId, Point> positions_;
  std::map<Simplex, std::vector<Point>> edges_;
};

struct CutoffOptions {
  int resolution = 256;
  // Largest phase step between adjacent homotopy samples before the lift is ambiguous.
  double max_phase_step = kPi / 2.0;
  double tolerance = kCutoffTolerance;
  // Extra change of vertex frames applied before cutting off.
  std::optional<GaugeAssignment> gauge;
};

HLGF cutoff(const TransportOracle& o, const SkeletalComplex& c, const CutoffOptions& options = {});

// Continuous lift of sampled SO(3) elements; throws LiftAmbiguityError when adjacent
// samples are more than max_step apart.
LoopClass track_so3_lift(std::span<const Quaternion> samples, double max_step = kPi / 2.0);
// Unwrapped U(1) phase of sampled angles, same guard.
LoopClass track_u1_lift(std::span<const double> angles, double max_step = kPi / 2.0);

}  // namespace hlgf
