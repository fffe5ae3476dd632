#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hlgf/complex.hpp"
#include "hlgf/gauge_group.hpp"
#include "hlgf/globe_word.hpp"

namespace hlgf {

// Endpoint data of a 2-globe in G; its interior carries no information since pi_2 G = 0.
struct TwoGlobe {
  LoopClass source;
  LoopClass target;
};

using Evaluation = std::variant<GroupElement, LoopClass, TwoGlobe>;

struct FieldOptions {
  // Endpoint tolerance for face and 3-cell compatibility and for loop concatenation.
  double tolerance = kExactTolerance;
};

using GaugeAssignment = std::map<VertexId, GroupElement>;

// Trivialized gauge field: generator data on simplices of paths.
class HLGF {
 public:
  const SkeletalComplex& complex() const noexcept { return complex_; }
  Backend backend() const noexcept { return backend_; }
  double tolerance() const noexcept { return tolerance_; }
  const std::map<Simplex, GroupElement>& edge_values() const noexcept { return edges_; }
  const std::map<Simplex, LoopClass>& face_values() const noexcept { return faces_; }
  const std::map<Simplex, TwoGlobe>& cell3_values() const noexcept { return cells3_; }

 private:
  HLGF(SkeletalComplex c, Backend b, double tol)
      : complex_(std::move(c)), backend_(b), tolerance_(tol) {}

  SkeletalComplex complex_;
  Backend backend_;
  double tolerance_;
  std::map<Simplex, GroupElement> edges_;
  std::map<Simplex, LoopClass> faces_;
  std::map<Simplex, TwoGlobe> cells3_;

  friend HLGF new_field(SkeletalComplex, Backend, std::map<Simplex, GroupElement>,
                        std::map<Simplex, LoopClass>, std::optional<std::map<Simplex, TwoGlobe>>,
                        FieldOptions);
};

// Edges are free data; faces are checked against edges; 3-cells against faces.
// Omitted 3-cell data is derived from the faces. Throws ValidationError naming the simplex.
HLGF new_field(SkeletalComplex c, Backend backend, std::map<Simplex, GroupElement> edges,
               std::map<Simplex, LoopClass> faces,
               std::optional<std::map<Simplex, TwoGlobe>> cells3 = std::nullopt,
               FieldOptions options = {});

HLGF identity_field(const SkeletalComplex& c, Backend backend);

// Homomorphic evaluation: dim 1 -> GroupElement, dim 2 -> LoopClass, dim 3 -> TwoGlobe.
// Vertices evaluate to the identity element.
Evaluation evaluate(const HLGF& f, const GlobeWord& w);
GroupElement evaluate_path(const HLGF& f, const GlobeWord& w);
LoopClass evaluate_loop(const HLGF& f, const GlobeWord& w);

// g_t * A * g_s^-1 on every generator.
HLGF gauge_transform(const HLGF& f, const GaugeAssignment& g);
HLGF change_trivialization(const HLGF& f, const GaugeAssignment& psi);

struct Violation {
  enum class Condition { kFaceCompatibility, kExtendibility };
  Simplex simplex;
  Condition condition;
  double residual;
  // Extendibility violations carry the pi1 class of the boundary loop.
  std::optional<Pi1Element> pi1;
};

struct ConsistencyReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ConsistencyReport check_consistency(const HLGF& f);

// Edges Haar-distributed; face lifts endpoint-compatible with a random winding offset.
HLGF random_field(const SkeletalComplex& c, Backend backend, std::uint64_t seed);
GaugeAssignment random_gauge(const SkeletalComplex& c, Backend backend, std::uint64_t seed);

}  // namespace hlgf
