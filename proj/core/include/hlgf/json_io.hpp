#pragma once

#include <nlohmann/json.hpp>

#include "hlgf/charge.hpp"
#include "hlgf/complex.hpp"
#include "hlgf/field.hpp"
#include "hlgf/gauge_group.hpp"

namespace hlgf {

using Json = nlohmann::json;

Json to_json(const SkeletalComplex& c);
// Accepts an inline complex object or the name of a built-in.
SkeletalComplex complex_from_json(const Json& j);

// U1: radians. SO3/SU2: [w,x,y,z]; SO3 written with its canonical sign.
Json to_json(const GroupElement& g);
GroupElement element_from_json(Backend b, const Json& j);

// {"source", "target", "lift"}; the lift is a real (U1) or a sign (SO3) and is absent for SU2.
Json to_json(const LoopClass& l);
LoopClass loop_from_json(Backend b, const Json& j, double tol = kExactTolerance);

Json to_json(const HLGF& f);
HLGF field_from_json(const Json& j);

Json gauge_to_json(Backend b, const GaugeAssignment& g);
GaugeAssignment gauge_from_json(const Json& j, Backend expected);

Json to_json(const ChargeResult& r);
Json to_json(const ConsistencyReport& r);
Json to_json(const ValidationReport& r);
Json to_json(const BundleClassification& b);
Json to_json(const Evaluation& e);

}  // namespace hlgf
