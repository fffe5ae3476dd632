#include "hlgf/json_io.hpp"

#include <algorithm>
#include <cmath>

#include "hlgf/errors.hpp"

namespace hlgf {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return j.get<double>();
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ValidationError("quaternions are [w,x,y,z] arrays");
  const Quaternion q{number(j[0], "w"), number(j[1], "x"), number(j[2], "y"), number(j[3], "z")};
  if (std::abs(q.norm() - 1.0) > 1e-6) throw ValidationError("quaternion is not of unit norm");
  return q;
}

Json quaternion_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

bool is_builtin_copy(const SkeletalComplex& c) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), c.name()) == names.end()) return false;
  return build_builtin(c.name()) == c;
}

std::string condition_name(Violation::Condition c) {
  return c == Violation::Condition::kFaceCompatibility ? "face-compat" : "extendibility";
}

Json pi1_json(const Pi1Element& p) {
  if (p.backend() == Backend::kSO3) return p.to_string();
  return p.value();
}

}  // namespace

Json to_json(const SkeletalComplex& c) {
  Json simplices = Json::object();
  for (int k = 1; k <= c.dim(); ++k) {
    Json list = Json::array();
    for (const Simplex& s : c.simplices(k)) list.push_back(s);
    simplices[std::to_string(k)] = list;
  }
  Json out{{"name", c.name()}, {"dim", c.dim()}, {"simplices", simplices}};
  if (c.orientation()) {
    Json o = Json::object();
    for (const auto& [s, sign] : *c.orientation()) o[simplex_key(s)] = sign;
    out["orientation"] = o;
  }
  return out;
}

SkeletalComplex complex_from_json(const Json& j) {
  if (j.is_string()) return build_builtin(j.get<std::string>());
  const Json& name = member(j, "name");
  const Json& dim = member(j, "dim");
  if (!name.is_string() || !dim.is_number_integer()) {
    throw ValidationError("complex needs a string name and an integer dim");
  }
  std::array<std::set<Simplex>, 4> simplices;
  for (const auto& [key, list] : member(j, "simplices").items()) {
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw ValidationError("bad simplex dimension key '" + key + "'");
    }
    if (k < 1 || k > 3 || !list.is_array()) throw ValidationError("bad simplices entry '" + key + "'");
    for (const Json& s : list) {
      if (!s.is_array()) throw ValidationError("simplices are arrays of vertex ids");
      simplices[k].insert(s.get<Simplex>());
    }
  }
  std::optional<SkeletalComplex::Orientation> orientation;
  if (j.contains("orientation") && !j.at("orientation").is_null()) {
    orientation.emplace();
    for (const auto& [key, sign] : j.at("orientation").items()) {
      if (!sign.is_number_integer()) throw ValidationError("orientation signs are integers");
      (*orientation)[parse_simplex_key(key)] = sign.get<int>();
    }
  }
  try {
    return SkeletalComplex(name.get<std::string>(), dim.get<int>(), std::move(simplices),
                           std::move(orientation));
  } catch (const InvalidArgument& e) {
    throw ValidationError(e.what());
  }
}

Json to_json(const GroupElement& g) {
  switch (g.backend()) {
    case Backend::kU1:
      return g.angle();
    case Backend::kSO3:
      return quaternion_json(g.quaternion().canonical_sign());
    case Backend::kSU2:
      return quaternion_json(g.quaternion());
  }
  return nullptr;
}

GroupElement element_from_json(Backend b, const Json& j) {
  if (b == Backend::kU1) return GroupElement::u1(number(j, "U1 angle"));
  return GroupElement::from_quaternion(b, quaternion_from_json(j));
}

Json to_json(const LoopClass& l) {
  switch (l.backend()) {
    case Backend::kU1:
      return {{"source", l.base()}, {"target", l.target().angle()}, {"lift", l.lift()}};
    case Backend::kSO3: {
      const Quaternion q0 = l.q0().canonical_sign();
      const Quaternion q1 = q0 == l.q0() ? l.q1() : -l.q1();
      const Quaternion target = q1.canonical_sign();
      return {{"source", quaternion_json(q0)},
              {"target", quaternion_json(target)},
              {"lift", target == q1 ? 1 : -1}};
    }
    case Backend::kSU2:
      return {{"source", quaternion_json(l.q0())}, {"target", quaternion_json(l.q1())}};
  }
  return nullptr;
}

LoopClass loop_from_json(Backend b, const Json& j, double tol) {
  switch (b) {
    case Backend::kU1: {
      const double source = number(member(j, "source"), "loop source");
      const double lift = number(member(j, "lift"), "loop lift");
      const LoopClass l = LoopClass::u1(source, lift);
      if (j.contains("target") &&
          dist(l.target(), GroupElement::u1(number(j.at("target"), "loop target"))) > tol) {
        throw ValidationError("loop target disagrees with source + lift");
      }
      return l;
    }
    case Backend::kSO3: {
      const Json& sign = member(j, "lift");
      if (!sign.is_number_integer() || std::abs(sign.get<int>()) != 1) {
        throw ValidationError("SO3 loop lift must be +1 or -1");
      }
      const Quaternion target = quaternion_from_json(member(j, "target"));
      return LoopClass::quaternion_pair(b, quaternion_from_json(member(j, "source")),
                                        sign.get<int>() > 0 ? target : -target);
    }
    case Backend::kSU2:
      return LoopClass::quaternion_pair(b, quaternion_from_json(member(j, "source")),
                                        quaternion_from_json(member(j, "target")));
  }
  throw ValidationError("unknown backend");
}

Json to_json(const HLGF& f) {
  Json edges = Json::object();
  for (const auto& [s, g] : f.edge_values()) edges[simplex_key(s)] = to_json(g);
  Json faces = Json::object();
  for (const auto& [s, l] : f.face_values()) faces[simplex_key(s)] = to_json(l);
  Json out{{"group", std::string(backend_name(f.backend()))},
           {"complex", is_builtin_copy(f.complex()) ? Json(f.complex().name()) : to_json(f.complex())},
           {"tolerance", f.tolerance()},
           {"edges", edges},
           {"faces", faces}};
  if (!f.cell3_values().empty()) {
    Json cells = Json::object();
    for (const auto& [s, g] : f.cell3_values()) {
      cells[simplex_key(s)] = {{"source", to_json(g.source)}, {"target", to_json(g.target)}};
    }
    out["cells3"] = cells;
  }
  return out;
}

HLGF field_from_json(const Json& j) {
  const Json& group = member(j, "group");
  if (!group.is_string()) throw ValidationError("group must be a string");
  const Backend b = parse_backend(group.get<std::string>());
  SkeletalComplex c = complex_from_json(member(j, "complex"));
  FieldOptions options;
  if (j.contains("tolerance")) options.tolerance = number(j.at("tolerance"), "tolerance");

  std::map<Simplex, GroupElement> edges;
  for (const auto& [key, value] : member(j, "edges").items()) {
    edges.emplace(parse_simplex_key(key), element_from_json(b, value));
  }
  std::map<Simplex, LoopClass> faces;
  if (j.contains("faces")) {
    for (const auto& [key, value] : j.at("faces").items()) {
      faces.emplace(parse_simplex_key(key), loop_from_json(b, value, options.tolerance));
    }
  }
  std::optional<std::map<Simplex, TwoGlobe>> cells;
  if (j.contains("cells3")) {
    cells.emplace();
    for (const auto& [key, value] : j.at("cells3").items()) {
      cells->emplace(parse_simplex_key(key),
                     TwoGlobe{loop_from_json(b, member(value, "source"), options.tolerance),
                              loop_from_json(b, member(value, "target"), options.tolerance)});
    }
  }
  return new_field(std::move(c), b, std::move(edges), std::move(faces), std::move(cells), options);
}

Json gauge_to_json(Backend b, const GaugeAssignment& g) {
  Json vertices = Json::object();
  for (const auto& [v, e] : g) vertices[std::to_string(v)] = to_json(e);
  return {{"group", std::string(backend_name(b))}, {"vertices", vertices}};
}

GaugeAssignment gauge_from_json(const Json& j, Backend expected) {
  const Json& group = member(j, "group");
  if (!group.is_string() || parse_backend(group.get<std::string>()) != expected) {
    throw ValidationError("gauge assignment group does not match the field");
  }
  GaugeAssignment g;
  for (const auto& [key, value] : member(j, "vertices").items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw ValidationError("bad vertex key '" + key + "'");
    }
    g.emplace(v, element_from_json(expected, value));
  }
  return g;
}

Json to_json(const ChargeResult& r) {
  return {{"Q", pi1_json(r.value)},
          {"route", std::string(route_name(r.route))},
          {"residual", r.residual}};
}

Json to_json(const ConsistencyReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    Json entry{{"simplex", simplex_key(v.simplex)},
               {"condition", condition_name(v.condition)},
               {"residual", std::isfinite(v.residual) ? Json(v.residual) : Json(nullptr)}};
    entry["pi1"] = v.pi1 ? pi1_json(*v.pi1) : Json(nullptr);
    violations.push_back(entry);
  }
  return {{"ok", r.ok()}, {"violations", violations}};
}

Json to_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const ValidationIssue& i : r.issues) {
    const char* kind = i.kind == ValidationIssue::Kind::kClosure    ? "closure"
                       : i.kind == ValidationIssue::Kind::kOrdering ? "ordering"
                                                                    : "orientation";
    issues.push_back({{"kind", kind}, {"simplex", i.simplex}, {"message", i.message}});
  }
  return {{"ok", r.ok()}, {"issues", issues}};
}

Json to_json(const BundleClassification& b) {
  return {{"base_dim", b.base_dim},
          {"group", std::string(backend_name(b.backend))},
          {"invariant", pi1_json(b.invariant)},
          {"statement", b.statement}};
}

Json to_json(const Evaluation& e) {
  if (const auto* g = std::get_if<GroupElement>(&e)) {
    return {{"kind", "element"}, {"value", to_json(*g)}};
  }
  if (const auto* l = std::get_if<LoopClass>(&e)) {
    Json out = to_json(*l);
    out["kind"] = "loop";
    return out;
  }
  const auto& t = std::get<TwoGlobe>(e);
  return {{"kind", "2-globe"}, {"source", to_json(t.source)}, {"target", to_json(t.target)}};
}

}  // namespace hlgf
