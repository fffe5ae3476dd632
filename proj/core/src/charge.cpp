#include "hlgf/charge.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "hlgf/errors.hpp"
#include "hlgf/sweep.hpp"

namespace hlgf {

namespace {

std::string fingerprint(const SkeletalComplex& c, const std::vector<VertexId>& cycle) {
  std::ostringstream out;
  out << c.dim() << '|';
  for (int k = 1; k <= c.dim(); ++k) {
    for (const Simplex& s : c.simplices(k)) out << simplex_key(s) << ' ';
    out << '|';
  }
  if (c.orientation()) {
    for (const auto& [s, sign] : *c.orientation()) out << simplex_key(s) << (sign > 0 ? '+' : '-');
  }
  out << '|';
  for (VertexId v : cycle) out << v << ',';
  return out.str();
}

// Sweeping words depend only on the complex and the cycle; building them is the costly part.
GlobeWord cached_sweep(const SkeletalComplex& c, const std::vector<VertexId>* cycle) {
  static std::mutex mutex;
  static std::map<std::string, GlobeWord> cache;
  const std::vector<VertexId> equator = cycle ? *cycle : default_equator(c);
  const std::string key = fingerprint(c, equator);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GlobeWord w = meridian_family_word(c, equator);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(w)).first->second;
}

void require_surface(const HLGF& f) {
  const SkeletalComplex& c = f.complex();
  if (c.dim() != 2) throw InvalidArgument("topological charge needs a 2D base");
  if (!c.orientation()) throw InvalidArgument("topological charge needs an oriented base");
  if (!is_closed_surface(c)) throw InvalidArgument("topological charge needs a closed base");
}

ChargeResult from_loop(const HLGF& f, const LoopClass& loop, ChargeRoute route) {
  return {pi1_class(loop, f.tolerance()), route, winding_residual(loop)};
}

}  // namespace

std::string_view route_name(ChargeRoute r) {
  switch (r) {
    case ChargeRoute::kCoveringWord:
      return "covering_word";
    case ChargeRoute::kFaceSum:
      return "face_sum";
    case ChargeRoute::kTransitionWinding:
      return "transition_winding";
  }
  return "?";
}

ChargeRoute parse_route(std::string_view name) {
  if (name == "covering" || name == "covering_word") return ChargeRoute::kCoveringWord;
  if (name == "facesum" || name == "face_sum") return ChargeRoute::kFaceSum;
  if (name == "transition" || name == "transition_winding") return ChargeRoute::kTransitionWinding;
  throw InvalidArgument("unknown charge route '" + std::string(name) + "'");
}

ChargeResult topological_charge(const HLGF& f) {
  require_surface(f);
  return from_loop(f, evaluate_loop(f, cached_sweep(f.complex(), nullptr)),
                   ChargeRoute::kCoveringWord);
}

ChargeResult transition_winding(const HLGF& f, const std::vector<VertexId>& equator) {
  require_surface(f);
  return from_loop(f, evaluate_loop(f, cached_sweep(f.complex(), &equator)),
                   ChargeRoute::kTransitionWinding);
}

ChargeResult charge_face_sum(const HLGF& f) {
  require_surface(f);
  const auto faces = oriented_faces(f.complex());
  switch (f.backend()) {
    case Backend::kU1: {
      double total = 0.0;
      for (const auto& of : faces) total += of.sign * f.face_values().at(of.face).lift();
      const double w = total / kTwoPi;
      const double n = std::round(w);
      if (std::abs(w - n) > 1e-3) {
        std::ostringstream msg;
        msg << "face lift sum " << total << " is not near a multiple of 2pi";
        throw ValidationError(msg.str());
      }
      return {Pi1Element::u1(static_cast<std::int64_t>(n)), ChargeRoute::kFaceSum,
              std::abs(total - kTwoPi * n)};
    }
    case Backend::kSO3: {
      // Each face sign is read against the stored edge lifts; flipping an edge lift
      // flips the two faces on that edge, so the product is well defined.
      int product = 1;
      for (const auto& of : faces) {
        const Simplex& s = of.face;
        const LoopClass& a = f.face_values().at(s);
        const Quaternion& ij = f.edge_values().at({s[0], s[1]}).quaternion();
        const Quaternion& ik = f.edge_values().at({s[0], s[2]}).quaternion();
        const Quaternion& jk = f.edge_values().at({s[1], s[2]}).quaternion();
        const double align = a.q0().dot(jk) < 0.0 ? -1.0 : 1.0;
        const double sigma = align * a.q1().dot(ij.conjugate() * ik) < 0.0 ? -1.0 : 1.0;
        product *= static_cast<int>(sigma);
      }
      return {Pi1Element::so3(product), ChargeRoute::kFaceSum, 0.0};
    }
    case Backend::kSU2:
      return {Pi1Element::su2(), ChargeRoute::kFaceSum, 0.0};
  }
  throw InvalidArgument("unknown backend");
}

ClassificationRefused::ClassificationRefused(ConsistencyReport report)
    : ValidationError("classification refused: gluing data fails " +
                      std::to_string(report.violations.size()) +
                      " consistency condition(s); see the consistency report"),
      report_(std::move(report)) {}

BundleClassification classify_bundle(const HLGF& f) {
  const int dim = f.complex().dim();
  const std::string group(backend_name(f.backend()));
  if (dim == 2) {
    const ChargeResult q = topological_charge(f);
    std::string statement =
        "bundles over this base with structure group " + group +
        " are classified by pi1(" + group + "); this field has invariant " + q.value.to_string();
    if (f.backend() == Backend::kU1) {
      statement += " (U1 bundle of Chern number " + q.value.to_string() + ")";
    }
    return {dim, f.backend(), q.value, statement};
  }
  if (dim == 3) {
    ConsistencyReport report = check_consistency(f);
    if (!report.ok()) throw ClassificationRefused(std::move(report));
    return {dim, f.backend(), Pi1Element::zero(f.backend()),
            "gluing data passes every tetrahedron condition; the field determines a " + group +
                "-bundle over the base"};
  }
  throw InvalidArgument("bundle classification needs a base of dimension 2 or 3");
}

}  // namespace hlgf
