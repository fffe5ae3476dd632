#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlgf/errors.hpp"
#include "hlgf/field.hpp"
#include "hlgf/gauge_group.hpp"

namespace hlgf {

enum class ChargeRoute { kCoveringWord, kFaceSum, kTransitionWinding };

std::string_view route_name(ChargeRoute r);
// Accepts "covering", "facesum", "transition" and the long names.
ChargeRoute parse_route(std::string_view name);

struct ChargeResult {
  Pi1Element value;
  ChargeRoute route;
  // Distance of the U1 lift from 2pi Z; zero for quaternion backends.
  double residual;
};

// Requires a closed oriented 2D sphere; evaluates the covering word.
ChargeResult topological_charge(const HLGF& f);
ChargeResult charge_face_sum(const HLGF& f);
ChargeResult transition_winding(const HLGF& f, const std::vector<VertexId>& equator);

struct BundleClassification {
  int base_dim;
  Backend backend;
  Pi1Element invariant;
  std::string statement;
};

// Thrown when 3D gluing data fails the extendibility check.
class ClassificationRefused : public ValidationError {
 public:
  explicit ClassificationRefused(ConsistencyReport report);
  const ConsistencyReport& report() const noexcept { return report_; }

 private:
  ConsistencyReport report_;
};

BundleClassification classify_bundle(const HLGF& f);

}  // namespace hlgf
