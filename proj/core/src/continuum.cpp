#include "hlgf/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <sstream>

#include "hlgf/errors.hpp"

namespace hlgf {

namespace {

double dot(const Point& a, const Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Point scaled(const Point& a, double s) { return {a[0] * s, a[1] * s, a[2] * s, a[3] * s}; }

Point add(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

Point normalized(const Point& a) { return scaled(a, 1.0 / norm(a)); }

Point cross3(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0], 0.0};
}

// Angle between unit vectors, stable near 0 and pi.
double arc_angle(const Point& a, const Point& b) {
  return 2.0 * std::atan2(norm(sub(a, b)), norm(add(a, b)));
}

// Rodrigues rotation of v about unit axis k.
Point rotate(const Point& v, const Point& k, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return add(add(scaled(v, c), scaled(cross3(k, v), s)), scaled(k, dot(k, v) * (1.0 - c)));
}

Point slerp_derivative(const Point& a, const Point& b, double t) {
  const double theta = arc_angle(a, b);
  const double s = std::sin(theta);
  return scaled(add(scaled(a, -std::cos((1.0 - t) * theta)), scaled(b, std::cos(t * theta))),
                theta / s);
}

// Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 4> kNodes{-0.8611363115940526, -0.3399810435848563,
                                       0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kWeights{0.3478548451374538, 0.6521451548625461,
                                         0.6521451548625461, 0.3478548451374538};

// Line integral of a one-form along the great-circle arc a -> b, restricted to t in [t0, t1].
template <class Form>
double arc_integral(const Form& form, const Point& a, const Point& b, double t0, double t1) {
  if (t1 <= t0 || arc_angle(a, b) == 0.0) return 0.0;
  double total = 0.0;
  const double half = 0.5 * (t1 - t0);
  const double mid = 0.5 * (t1 + t0);
  for (std::size_t q = 0; q < kNodes.size(); ++q) {
    const double t = mid + half * kNodes[q];
    total += kWeights[q] * form(slerp(a, b, t), slerp_derivative(a, b, t));
  }
  return total * half;
}

class RoundSphereOracle final : public TransportOracle {
 public:
  Backend backend() const override { return Backend::kU1; }
  std::string name() const override { return "round-sphere"; }
  TrivializationConvention convention() const override {
    return TrivializationConvention::kTreeTransport;
  }

  GroupElement transport(std::span<const Point> path) const override {
    if (path.empty()) throw InvalidArgument("empty path");
    for (const Point& p : path) {
      if (p[3] != 0.0) throw InvalidArgument("round-sphere oracle lives on the 2-sphere");
    }
    Point u = frame(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Point& p = path[i - 1];
      const Point& q = path[i];
      const Point axis = cross3(p, q);
      const double s = norm(axis);
      if (s == 0.0) continue;
      u = rotate(u, scaled(axis, 1.0 / s), arc_angle(p, q));
    }
    const Point& end = path.back();
    u = normalized(sub(u, scaled(end, dot(u, end))));
    const Point e = frame(end);
    return GroupElement::u1(std::atan2(dot(end, cross3(e, u)), dot(e, u)));
  }

 private:
  // Projection of a fixed generic direction; no built-in vertex is parallel to it.
  static Point frame(const Point& p) {
    static const Point kAmbient = normalized(Point{0.2672612419124244, 0.5345224838248488,
                                                   0.8017837257372732, 0.0});
    return normalized(sub(kAmbient, scaled(p, dot(kAmbient, p))));
  }
};

class MonopoleOracle final : public TransportOracle {
 public:
  explicit MonopoleOracle(int n) : n_(n) {}
  Backend backend() const override { return Backend::kU1; }
  std::string name() const override { return "monopole:" + std::to_string(n_); }

  GroupElement transport(std::span<const Point> path) const override {
    if (path.empty()) throw InvalidArgument("empty path");
    double phase = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) phase += segment(path[i - 1], path[i]);
    return GroupElement::u1(phase);
  }

 private:
  static bool north(const Point& p) { return p[2] >= 0.0; }

  double potential(bool north_chart, const Point& x, const Point& v) const {
    const double twist = x[0] * v[1] - x[1] * v[0];
    if (north_chart) return 0.5 * n_ * twist / (1.0 + x[2]);
    return -0.5 * n_ * twist / (1.0 - x[2]);
  }

  double segment(const Point& a, const Point& b) const {
    const bool start = north(a);
    const bool end = north(b);
    const auto form = [this](bool chart) {
      return [this, chart](const Point& x, const Point& v) { return potential(chart, x, v); };
    };
    if (start == end) return arc_integral(form(start), a, b, 0.0, 1.0);
    // Bisect for the chart change along the arc.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (north(slerp(a, b, mid)) == start ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    const Point x = slerp(a, b, t);
    const double phi = std::atan2(x[1], x[0]);
    // u_S = exp(-i n phi) u_N on the overlap.
    const double jump = start ? -n_ * phi : n_ * phi;
    return arc_integral(form(start), a, b, 0.0, t) + jump + arc_integral(form(end), a, b, t, 1.0);
  }

  int n_;
};

class TrivialOracle final : public TransportOracle {
 public:
  Backend backend() const override { return Backend::kU1; }
  std::string name() const override { return "trivial"; }
  GroupElement transport(std::span<const Point> path) const override {
    if (path.empty()) throw InvalidArgument("empty path");
    return id(Backend::kU1);
  }
};

class LinearPotentialOracle final : public TransportOracle {
 public:
  explicit LinearPotentialOracle(const std::array<std::array<double, 4>, 4>& m) : m_(m) {}
  Backend backend() const override { return Backend::kU1; }
  std::string name() const override { return "linear-potential"; }

  GroupElement transport(std::span<const Point> path) const override {
    if (path.empty()) throw InvalidArgument("empty path");
    const auto form = [this](const Point& x, const Point& v) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) s += m_[a][b] * x[a] * v[b];
      }
      return s;
    };
    double phase = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      phase += arc_integral(form, path[i - 1], path[i], 0.0, 1.0);
    }
    return GroupElement::u1(phase);
  }

 private:
  std::array<std::array<double, 4>, 4> m_;
};

class EmbeddedSO3Oracle final : public TransportOracle {
 public:
  explicit EmbeddedSO3Oracle(std::shared_ptr<const TransportOracle> base) : base_(std::move(base)) {
    if (!base_ || base_->backend() != Backend::kU1) {
      throw InvalidArgument("embedded SO3 oracle needs a U1 base oracle");
    }
  }
  Backend backend() const override { return Backend::kSO3; }
  std::string name() const override { return "so3(" + base_->name() + ")"; }
  TrivializationConvention convention() const override { return base_->convention(); }
  GroupElement transport(std::span<const Point> path) const override {
    const double angle = base_->transport(path).angle();
    return GroupElement::so3(Quaternion::axis_angle({0.0, 0.0, 1.0}, angle));
  }

 private:
  std::shared_ptr<const TransportOracle> base_;
};

std::vector<Point> sampled_arc(const Point& a, const Point& b, int r) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (int m = 0; m <= r; ++m) out.push_back(slerp(a, b, static_cast<double>(m) / r));
  return out;
}

Point pentachoron_vertex(int i) {
  // Regular 4-simplex: centred unit basis vectors of R^5 written in an orthonormal
  // basis of the hyperplane sum = 0.
  std::array<std::array<double, 5>, 5> w{};
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) w[a][b] = (a == b ? 1.0 : 0.0) - 0.2;
  }
  std::array<std::array<double, 5>, 4> basis{};
  for (int k = 0; k < 4; ++k) {
    std::array<double, 5> v = w[k];
    for (int j = 0; j < k; ++j) {
      double d = 0.0;
      for (int c = 0; c < 5; ++c) d += v[c] * basis[j][c];
      for (int c = 0; c < 5; ++c) v[c] -= d * basis[j][c];
    }
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (int c = 0; c < 5; ++c) basis[k][c] = v[c] / n;
  }
  Point p{};
  for (int k = 0; k < 4; ++k) {
    for (int c = 0; c < 5; ++c) p[k] += w[i][c] * basis[k][c];
  }
  return normalized(p);
}

}  // namespace

Point slerp(const Point& a, const Point& b, double t) {
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const double theta = arc_angle(a, b);
  if (theta == 0.0) return a;
  const double s = std::sin(theta);
  return add(scaled(a, std::sin((1.0 - t) * theta) / s), scaled(b, std::sin(t * theta) / s));
}

Embedding builtin_embedding(const SkeletalComplex& c) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), c.name()) == names.end()) {
    throw InvalidArgument("no geometric embedding for complex '" + c.name() + "'");
  }
  const SkeletalComplex reference = build_builtin(c.name());
  for (int k = 1; k <= 3; ++k) {
    const bool same = k <= reference.dim() && k <= c.dim()
                          ? reference.simplices(k) == c.simplices(k)
                          : (k > reference.dim()) == (k > c.dim());
    if (!same) {
      throw InvalidArgument("complex '" + c.name() + "' differs from the built-in of that name");
    }
  }
  Embedding e;
  if (c.name() == "s2_five_vertex") {
    const double h = std::sqrt(3.0) / 2.0;
    e.positions = {{1, {-0.5, h, 0.0, 0.0}},
                   {2, {-0.5, -h, 0.0, 0.0}},
                   {3, {1.0, 0.0, 0.0, 0.0}},
                   {4, {0.0, 0.0, 1.0, 0.0}},
                   {5, {0.0, 0.0, -1.0, 0.0}}};
    e.ambient_dim = 3;
    e.frame_root = 4;
  } else if (c.name() == "s2_tetra") {
    const double s = 1.0 / std::sqrt(3.0);
    e.positions = {{1, {s, s, s, 0.0}},
                   {2, {s, -s, -s, 0.0}},
                   {3, {-s, -s, s, 0.0}},
                   {4, {-s, s, -s, 0.0}}};
    e.ambient_dim = 3;
    e.frame_root = 4;
  } else {
    for (int i = 0; i < 5; ++i) e.positions[i + 1] = pentachoron_vertex(i);
    e.ambient_dim = 4;
    e.frame_root = 5;
  }
  return e;
}

std::unique_ptr<TransportOracle> oracle_round_sphere() { return std::make_unique<RoundSphereOracle>(); }

std::unique_ptr<TransportOracle> oracle_monopole(int n) {
  if (n < -8 || n > 8) throw InvalidArgument("monopole charge must satisfy |n| <= 8");
  return std::make_unique<MonopoleOracle>(n);
}

std::unique_ptr<TransportOracle> oracle_trivial() { return std::make_unique<TrivialOracle>(); }

std::unique_ptr<TransportOracle> oracle_linear_potential(
    const std::array<std::array<double, 4>, 4>& m) {
  return std::make_unique<LinearPotentialOracle>(m);
}

std::unique_ptr<TransportOracle> oracle_embedded_so3(std::shared_ptr<const TransportOracle> base) {
  return std::make_unique<EmbeddedSO3Oracle>(std::move(base));
}

std::unique_ptr<TransportOracle> parse_oracle(std::string_view name) {
  if (name == "round-sphere") return oracle_round_sphere();
  if (name == "trivial") return oracle_trivial();
  constexpr std::string_view kMonopole = "monopole:";
  if (name.substr(0, kMonopole.size()) == kMonopole) {
    const std::string digits(name.substr(kMonopole.size()));
    try {
      std::size_t used = 0;
      const int n = std::stoi(digits, &used);
      if (used == digits.size()) return oracle_monopole(n);
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("unknown oracle '" + std::string(name) +
                        "' (expected round-sphere, monopole:<n> or trivial)");
}

SampledGeometry::SampledGeometry(const SkeletalComplex& c, const Embedding& e, int resolution)
    : resolution_(resolution), positions_(e.positions) {
  if (resolution < 1) throw InvalidArgument("resolution must be positive");
  for (const Simplex& s : c.simplices(1)) {
    edges_.emplace(s, sampled_arc(positions_.at(s[1]), positions_.at(s[0]), resolution));
  }
}

const std::vector<Point>& SampledGeometry::edge_path(const Simplex& edge) const {
  const auto it = edges_.find(edge);
  if (it == edges_.end()) throw InvalidArgument("no sampled edge " + simplex_key(edge));
  return it->second;
}

std::vector<Point> SampledGeometry::face_path(const Simplex& face, int n) const {
  if (face.size() != 3 || n < 0 || n > resolution_) {
    throw InvalidArgument("bad face sample request");
  }
  const VertexId i = face[0], j = face[1], k = face[2];
  if (n == 0) return edge_path({j, k});
  if (n == resolution_) {
    std::vector<Point> out = edge_path({i, k});
    const auto& back = edge_path({i, j});
    out.insert(out.end(), back.rbegin() + 1, back.rend());
    return out;
  }
  const Point& x = edge_path({i, j})[static_cast<std::size_t>(n)];
  std::vector<Point> out = sampled_arc(positions_.at(k), x, resolution_);
  const std::vector<Point> second = sampled_arc(x, positions_.at(j), resolution_);
  out.insert(out.end(), second.begin() + 1, second.end());
  return out;
}

LoopClass track_u1_lift(std::span<const double> angles, double max_step) {
  if (angles.empty()) throw InvalidArgument("no samples to track");
  double lift = 0.0;
  for (std::size_t n = 1; n < angles.size(); ++n) {
    const double step = wrap_signed(angles[n] - angles[n - 1]);
    if (std::abs(step) > max_step) {
      std::ostringstream msg;
      msg << "lift ambiguity: phase step " << step << " between samples " << n - 1 << " and " << n
          << " exceeds " << max_step;
      throw LiftAmbiguityError(msg.str());
    }
    lift += step;
  }
  return LoopClass::u1(angles.front(), lift);
}

LoopClass track_so3_lift(std::span<const Quaternion> samples, double max_step) {
  if (samples.empty()) throw InvalidArgument("no samples to track");
  Quaternion current = samples.front();
  for (std::size_t n = 1; n < samples.size(); ++n) {
    Quaternion next = samples[n];
    if (next.dot(current) < 0.0) next = -next;
    // Rotation angle between adjacent samples is twice their angle on S^3.
    const double step = 2.0 * sphere_distance(current, next);
    if (step > max_step) {
      std::ostringstream msg;
      msg << "lift ambiguity: rotation step " << step << " between samples " << n - 1 << " and "
          << n << " exceeds " << max_step;
      throw LiftAmbiguityError(msg.str());
    }
    current = next;
  }
  return LoopClass::quaternion_pair(Backend::kSO3, samples.front(), current);
}

HLGF cutoff(const TransportOracle& o, const SkeletalComplex& c, const CutoffOptions& options) {
  const int r = options.resolution;
  if (r < 16) throw InvalidArgument("cutoff resolution must be at least 16");
  if (!(options.max_phase_step > 0.0)) throw InvalidArgument("max phase step must be positive");
  const Embedding embedding = builtin_embedding(c);
  const SampledGeometry geometry(c, embedding, r);
  const Backend backend = o.backend();

  // Path from v_a to v_b along their edge.
  const auto edge_between = [&](VertexId a, VertexId b) {
    std::vector<Point> p = geometry.edge_path({std::min(a, b), std::max(a, b)});
    if (a < b) std::reverse(p.begin(), p.end());
    return p;
  };

  std::map<VertexId, GroupElement> frames;
  for (VertexId v : c.vertices()) frames.emplace(v, id(backend));
  if (o.convention() == TrivializationConvention::kTreeTransport) {
    std::map<VertexId, int> depth{{embedding.frame_root, 0}};
    std::deque<VertexId> queue{embedding.frame_root};
    std::vector<VertexId> order;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexId w : c.neighbours(v)) {
        if (depth.emplace(w, depth[v] + 1).second) queue.push_back(w);
      }
    }
    for (VertexId v : order) {
      if (v == embedding.frame_root) continue;
      VertexId parent = 0;
      for (VertexId w : c.neighbours(v)) {
        if (depth.count(w) && depth.at(w) == depth.at(v) - 1) parent = std::max(parent, w);
      }
      const std::vector<Point> path = edge_between(parent, v);
      frames.at(v) = mul(frames.at(parent), inv(o.transport(path)));
    }
  }
  if (options.gauge) {
    for (auto& [v, g] : frames) {
      const auto it = options.gauge->find(v);
      if (it == options.gauge->end()) {
        throw InvalidArgument("gauge assignment misses vertex " + std::to_string(v));
      }
      g = mul(it->second, g);
    }
  }

  // Transport from v_s to v_t expressed in the vertex frames.
  const auto framed = [&](VertexId t, const std::vector<Point>& path, VertexId s) {
    return mul(mul(frames.at(t), o.transport(path)), inv(frames.at(s)));
  };

  std::map<Simplex, GroupElement> edges;
  for (const Simplex& e : c.simplices(1)) edges.emplace(e, framed(e[0], geometry.edge_path(e), e[1]));

  const auto face_value = [&](const Simplex& f) {
    std::vector<GroupElement> samples;
    samples.reserve(static_cast<std::size_t>(r) + 1);
    for (int n = 0; n <= r; ++n) samples.push_back(framed(f[1], geometry.face_path(f, n), f[2]));
    try {
      if (backend == Backend::kU1) {
        std::vector<double> angles;
        for (const auto& g : samples) angles.push_back(g.angle());
        return track_u1_lift(angles, options.max_phase_step);
      }
      if (backend == Backend::kSO3) {
        std::vector<Quaternion> qs;
        for (const auto& g : samples) qs.push_back(g.quaternion());
        return track_so3_lift(qs, options.max_phase_step);
      }
    } catch (const LiftAmbiguityError& e) {
      throw LiftAmbiguityError("face " + simplex_key(f) + ": " + e.what() + " at resolution " +
                               std::to_string(r) + "; increase the resolution");
    }
    return LoopClass::quaternion_pair(backend, samples.front().quaternion(),
                                      samples.back().quaternion());
  };

  std::map<Simplex, LoopClass> faces;
  if (c.dim() >= 2) {
    std::vector<Simplex> order(c.simplices(2).begin(), c.simplices(2).end());
    std::vector<std::future<LoopClass>> pending;
    for (const Simplex& f : order) {
      pending.push_back(std::async(std::launch::async, face_value, f));
    }
    // Collected in simplex order, so the result does not depend on completion order.
    for (std::size_t i = 0; i < order.size(); ++i) faces.emplace(order[i], pending[i].get());
  }
  return new_field(c, backend, std::move(edges), std::move(faces), std::nullopt,
                   FieldOptions{options.tolerance});
}

}  // namespace hlgf
