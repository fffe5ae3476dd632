#include "hlgf/field.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hlgf/errors.hpp"
#include "hlgf/sweep.hpp"

namespace hlgf {

namespace {

template <class V>
void require_total(const std::set<Simplex>& wanted, const std::map<Simplex, V>& given,
                   const char* what) {
  for (const Simplex& s : wanted) {
    if (!given.count(s)) throw ValidationError(std::string("missing data for ") + what + " " + simplex_key(s));
  }
  for (const auto& [s, v] : given) {
    if (!wanted.count(s)) throw ValidationError(std::string("unknown ") + what + " " + simplex_key(s));
  }
}

void require_backend(Backend want, Backend got, const Simplex& s) {
  if (want != got) {
    throw ValidationError("value on " + simplex_key(s) + " has backend " +
                          std::string(backend_name(got)) + ", field is " +
                          std::string(backend_name(want)));
  }
}

GlobeWord face_source_word(const Simplex& f) { return face(GlobeWord::generator(f), 1, Side::kMinus); }
GlobeWord face_target_word(const Simplex& f) { return face(GlobeWord::generator(f), 1, Side::kPlus); }

// Largest endpoint gap between a stored face value and the evaluations of its boundary words.
double face_gap(const HLGF& f, const Simplex& s, const LoopClass& value) {
  return std::max(dist(value.source(), evaluate_path(f, face_source_word(s))),
                  dist(value.target(), evaluate_path(f, face_target_word(s))));
}

double loop_gap(const LoopClass& a, const LoopClass& b) {
  if (a.backend() == Backend::kU1) {
    return std::max(dist(a.source(), b.source()), std::abs(a.lift() - b.lift()));
  }
  const double same = std::max(sphere_distance(a.q0(), b.q0()), sphere_distance(a.q1(), b.q1()));
  if (a.backend() == Backend::kSU2) return same;
  return std::min(same, std::max(sphere_distance(a.q0(), -b.q0()), sphere_distance(a.q1(), -b.q1())));
}

LoopClass as_loop(const Evaluation& e) {
  if (const auto* l = std::get_if<LoopClass>(&e)) return *l;
  throw InvalidArgument("word does not evaluate to a loop class");
}

TwoGlobe as_globe(const Evaluation& e) {
  if (const auto* g = std::get_if<TwoGlobe>(&e)) return *g;
  throw InvalidArgument("word does not evaluate to a 2-globe");
}

GroupElement as_element(const Evaluation& e) {
  if (const auto* g = std::get_if<GroupElement>(&e)) return *g;
  throw InvalidArgument("word does not evaluate to a group element");
}

Evaluation eval(const HLGF& f, const GlobeWord& w) {
  const Backend b = f.backend();
  switch (w.kind()) {
    case GlobeWord::Kind::kVertex:
      if (!f.complex().contains({w.vertex_id()})) {
        throw InvalidArgument("vertex v" + std::to_string(w.vertex_id()) + " is not in the complex");
      }
      return id(b);
    case GlobeWord::Kind::kGenerator: {
      const Simplex& s = w.simplex();
      if (w.dim() == 1) {
        if (const auto it = f.edge_values().find(s); it != f.edge_values().end()) return it->second;
      } else if (w.dim() == 2) {
        if (const auto it = f.face_values().find(s); it != f.face_values().end()) return it->second;
      } else if (const auto it = f.cell3_values().find(s); it != f.cell3_values().end()) {
        return it->second;
      }
      throw InvalidArgument("field has no value on generator " + simplex_key(s));
    }
    case GlobeWord::Kind::kDegenerate: {
      const Evaluation inner = eval(f, w.child());
      const int from = w.level();
      const int to = w.dim();
      if (from == 0) {
        if (to == 1) return id(b);
        const LoopClass c = loop_const(id(b));
        if (to == 2) return c;
        return TwoGlobe{c, c};
      }
      if (from == 1) {
        const LoopClass c = loop_const(as_element(inner));
        if (to == 2) return c;
        return TwoGlobe{c, c};
      }
      const LoopClass l = as_loop(inner);
      return TwoGlobe{l, l};
    }
    case GlobeWord::Kind::kInvert: {
      const Evaluation inner = eval(f, w.child());
      const int l = w.level();
      if (w.dim() == 1) return inv(as_element(inner));
      if (w.dim() == 2) return l == 0 ? loop_inv0(as_loop(inner)) : loop_inv1(as_loop(inner));
      const TwoGlobe g = as_globe(inner);
      if (l == 0) return TwoGlobe{loop_inv0(g.source), loop_inv0(g.target)};
      if (l == 1) return TwoGlobe{loop_inv1(g.source), loop_inv1(g.target)};
      return TwoGlobe{g.target, g.source};
    }
    case GlobeWord::Kind::kCompose: {
      const Evaluation a = eval(f, w.left());
      const Evaluation c = eval(f, w.right());
      const int l = w.level();
      const double tol = f.tolerance();
      if (w.dim() == 1) return mul(as_element(a), as_element(c));
      if (w.dim() == 2) {
        if (l == 0) return loop_compose0(as_loop(a), as_loop(c));
        return loop_compose1(as_loop(a), as_loop(c), tol);
      }
      const TwoGlobe x = as_globe(a);
      const TwoGlobe y = as_globe(c);
      if (l == 0) {
        return TwoGlobe{loop_compose0(x.source, y.source), loop_compose0(x.target, y.target)};
      }
      if (l == 1) {
        return TwoGlobe{loop_compose1(x.source, y.source, tol),
                        loop_compose1(x.target, y.target, tol)};
      }
      if (!loop_equal(y.target, x.source, tol)) {
        throw EndpointMismatch("2-globes do not match along their common loop");
      }
      return TwoGlobe{y.source, x.target};
    }
  }
  throw InvalidArgument("unknown word kind");
}

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

  double gaussian() {
    // Box-Muller; implemented here so streams are identical across standard libraries.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine() % span);
  }

  Quaternion haar() {
    for (;;) {
      const Quaternion q{gaussian(), gaussian(), gaussian(), gaussian()};
      if (q.norm() > 1e-6) return q.normalized();
    }
  }

  GroupElement element(Backend b) {
    if (b == Backend::kU1) return GroupElement::u1(kTwoPi * uniform());
    return GroupElement::from_quaternion(b, haar());
  }

  std::mt19937_64 engine;
};

}  // namespace

HLGF new_field(SkeletalComplex c, Backend backend, std::map<Simplex, GroupElement> edges,
               std::map<Simplex, LoopClass> faces,
               std::optional<std::map<Simplex, TwoGlobe>> cells3, FieldOptions options) {
  if (!(options.tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  const ValidationReport report = validate(c);
  if (!report.ok()) throw ValidationError(report.issues.front().message);

  HLGF f(std::move(c), backend, options.tolerance);
  const SkeletalComplex& cx = f.complex();

  require_total(cx.simplices(1), edges, "edge");
  for (const auto& [s, g] : edges) require_backend(backend, g.backend(), s);
  f.edges_ = std::move(edges);

  if (cx.dim() >= 2) {
    require_total(cx.simplices(2), faces, "face");
    for (const auto& [s, l] : faces) {
      require_backend(backend, l.backend(), s);
      const double gap = face_gap(f, s, l);
      if (gap > options.tolerance) {
        std::ostringstream msg;
        msg << "face " << simplex_key(s) << " is not compatible with its edges (gap " << gap << ")";
        throw ValidationError(msg.str());
      }
    }
    f.faces_ = std::move(faces);
  } else if (!faces.empty()) {
    throw ValidationError("face data given for a 1D complex");
  }

  if (cx.dim() == 3) {
    std::map<Simplex, TwoGlobe> derived;
    for (const Simplex& t : cx.simplices(3)) {
      const GlobeWord g = GlobeWord::generator(t);
      derived.emplace(t, TwoGlobe{evaluate_loop(f, face(g, 2, Side::kMinus)),
                                  evaluate_loop(f, face(g, 2, Side::kPlus))});
    }
    if (cells3) {
      require_total(cx.simplices(3), *cells3, "3-cell");
      for (const auto& [t, v] : *cells3) {
        const TwoGlobe& want = derived.at(t);
        if (!loop_equal(v.source, want.source, options.tolerance) ||
            !loop_equal(v.target, want.target, options.tolerance)) {
          throw ValidationError("3-cell " + simplex_key(t) + " is not compatible with its faces");
        }
      }
      f.cells3_ = std::move(*cells3);
    } else {
      f.cells3_ = std::move(derived);
    }
  } else if (cells3 && !cells3->empty()) {
    throw ValidationError("3-cell data given for a complex of dimension " +
                          std::to_string(cx.dim()));
  }
  return f;
}

HLGF identity_field(const SkeletalComplex& c, Backend backend) {
  std::map<Simplex, GroupElement> edges;
  std::map<Simplex, LoopClass> faces;
  for (const Simplex& e : c.simplices(1)) edges.emplace(e, id(backend));
  if (c.dim() >= 2) {
    for (const Simplex& s : c.simplices(2)) faces.emplace(s, loop_const(id(backend)));
  }
  return new_field(c, backend, std::move(edges), std::move(faces));
}

Evaluation evaluate(const HLGF& f, const GlobeWord& w) {
  if (w.dim() > f.complex().dim()) {
    throw InvalidArgument("word dimension " + std::to_string(w.dim()) +
                          " exceeds the complex dimension");
  }
  return eval(f, w);
}

GroupElement evaluate_path(const HLGF& f, const GlobeWord& w) { return as_element(evaluate(f, w)); }

LoopClass evaluate_loop(const HLGF& f, const GlobeWord& w) { return as_loop(evaluate(f, w)); }

HLGF gauge_transform(const HLGF& f, const GaugeAssignment& g) {
  const auto at = [&](VertexId v) -> const GroupElement& {
    const auto it = g.find(v);
    if (it == g.end()) throw InvalidArgument("gauge assignment misses vertex " + std::to_string(v));
    if (it->second.backend() != f.backend()) throw BackendMismatch("gauge assignment backend differs");
    return it->second;
  };
  std::map<Simplex, GroupElement> edges;
  for (const auto& [s, a] : f.edge_values()) {
    edges.emplace(s, mul(mul(at(s[0]), a), inv(at(s[1]))));
  }
  std::map<Simplex, LoopClass> faces;
  for (const auto& [s, a] : f.face_values()) {
    const LoopClass left = loop_const(at(s[1]));
    const LoopClass right = loop_const(inv(at(s[2])));
    faces.emplace(s, loop_compose0(loop_compose0(left, a), right));
  }
  return new_field(f.complex(), f.backend(), std::move(edges), std::move(faces), std::nullopt,
                   FieldOptions{f.tolerance()});
}

HLGF change_trivialization(const HLGF& f, const GaugeAssignment& psi) {
  return gauge_transform(f, psi);
}

ConsistencyReport check_consistency(const HLGF& f) {
  ConsistencyReport report;
  for (const auto& [s, value] : f.face_values()) {
    const double gap = face_gap(f, s, value);
    if (gap > f.tolerance()) {
      report.violations.push_back({s, Violation::Condition::kFaceCompatibility, gap, std::nullopt});
    }
  }
  for (const auto& [t, value] : f.cell3_values()) {
    const GlobeWord g = GlobeWord::generator(t);
    const double gap = std::max(loop_gap(value.source, evaluate_loop(f, face(g, 2, Side::kMinus))),
                                loop_gap(value.target, evaluate_loop(f, face(g, 2, Side::kPlus))));
    if (gap > f.tolerance()) {
      report.violations.push_back({t, Violation::Condition::kFaceCompatibility, gap, std::nullopt});
    }
  }
  if (f.complex().dim() == 3) {
    for (const Simplex& t : f.complex().simplices(3)) {
      try {
        const LoopClass a = evaluate_loop(f, tetra_boundary_word(f.complex(), t));
        const Pi1Element p = pi1_class(a, f.tolerance());
        if (!p.is_zero()) {
          const double residual = a.backend() == Backend::kU1 ? std::abs(a.lift()) : kTwoPi;
          report.violations.push_back({t, Violation::Condition::kExtendibility, residual, p});
        }
      } catch (const Error&) {
        report.violations.push_back(
            {t, Violation::Condition::kExtendibility, std::nan(""), std::nullopt});
      }
    }
  }
  return report;
}

HLGF random_field(const SkeletalComplex& c, Backend backend, std::uint64_t seed) {
  Rng rng(seed);
  std::map<Simplex, GroupElement> edges;
  for (const Simplex& e : c.simplices(1)) edges.emplace(e, rng.element(backend));
  std::map<Simplex, LoopClass> faces;
  if (c.dim() >= 2) {
    for (const Simplex& s : c.simplices(2)) {
      const GroupElement& ij = edges.at({s[0], s[1]});
      const GroupElement& ik = edges.at({s[0], s[2]});
      const GroupElement& jk = edges.at({s[1], s[2]});
      if (backend == Backend::kU1) {
        const double start = jk.angle();
        const double end = ik.angle() - ij.angle();
        const double lift = wrap_signed(end - start) + kTwoPi * rng.integer(-2, 2);
        faces.emplace(s, LoopClass::u1(start, lift));
      } else {
        const Quaternion end = ij.quaternion().conjugate() * ik.quaternion();
        const double sign = backend == Backend::kSO3 && rng.integer(0, 1) == 1 ? -1.0 : 1.0;
        faces.emplace(s, LoopClass::quaternion_pair(backend, jk.quaternion(),
                                                    sign < 0 ? -end : end));
      }
    }
  }
  return new_field(c, backend, std::move(edges), std::move(faces));
}

GaugeAssignment random_gauge(const SkeletalComplex& c, Backend backend, std::uint64_t seed) {
  Rng rng(seed);
  GaugeAssignment g;
  for (VertexId v : c.vertices()) g.emplace(v, rng.element(backend));
  return g;
}

}  // namespace hlgf
