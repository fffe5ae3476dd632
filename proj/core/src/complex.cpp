#include "hlgf/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hlgf/errors.hpp"

namespace hlgf {

std::string simplex_key(const Simplex& s) {
  const bool wide = std::any_of(s.begin(), s.end(), [](VertexId v) { return v >= 10 || v < 0; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex parse_simplex_key(const std::string& key) {
  Simplex s;
  if (key.find(',') != std::string::npos) {
    std::stringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        std::size_t used = 0;
        s.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw InvalidArgument("bad simplex key '" + key + "'");
      }
    }
  } else {
    for (char ch : key) {
      if (ch < '0' || ch > '9') throw InvalidArgument("bad simplex key '" + key + "'");
      s.push_back(ch - '0');
    }
  }
  if (s.empty()) throw InvalidArgument("empty simplex key");
  return s;
}

SkeletalComplex::SkeletalComplex(std::string name, int dim,
                                 std::array<std::set<Simplex>, 4> simplices,
                                 std::optional<Orientation> orientation)
    : name_(std::move(name)),
      dim_(dim),
      simplices_(std::move(simplices)),
      orientation_(std::move(orientation)) {
  if (dim_ < 1 || dim_ > 3) throw InvalidArgument("complex dimension must be 1, 2 or 3");
  for (int k = dim_ + 1; k <= 3; ++k) {
    if (!simplices_[k].empty()) throw InvalidArgument("simplices above the complex dimension");
  }
  std::set<VertexId> vs;
  for (int k = 1; k <= dim_; ++k) {
    for (const Simplex& s : simplices_[k]) {
      if (s.size() != static_cast<std::size_t>(k + 1)) {
        throw InvalidArgument("simplex " + simplex_key(s) + " listed at the wrong dimension");
      }
      vs.insert(s.begin(), s.end());
    }
  }
  vertices_.assign(vs.begin(), vs.end());
}

const std::set<Simplex>& SkeletalComplex::simplices(int k) const {
  if (k < 1 || k > 3) throw InvalidArgument("simplex dimension out of range");
  return simplices_[k];
}

bool SkeletalComplex::contains(const Simplex& s) const {
  if (s.size() == 1) return std::binary_search(vertices_.begin(), vertices_.end(), s[0]);
  if (s.size() < 2 || s.size() > 4) return false;
  return simplices_[s.size() - 1].count(s) > 0;
}

std::vector<VertexId> SkeletalComplex::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (const Simplex& e : simplices_[1]) {
    if (e[0] == v) out.push_back(e[1]);
    if (e[1] == v) out.push_back(e[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::array<std::set<Simplex>, 4> all_subsets(int n, int max_dim) {
  std::array<std::set<Simplex>, 4> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    Simplex s;
    for (int b = 0; b < n; ++b) {
      if (mask & (1 << b)) s.push_back(b + 1);
    }
    const int k = static_cast<int>(s.size()) - 1;
    if (k >= 1 && k <= max_dim) out[k].insert(s);
  }
  return out;
}

SkeletalComplex make_five_vertex() {
  std::array<std::set<Simplex>, 4> s;
  s[1] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}};
  s[2] = {{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 5}};
  SkeletalComplex::Orientation o{{{1, 2, 4}, 1},  {{2, 3, 4}, 1},  {{1, 3, 4}, -1},
                                  {{1, 2, 5}, -1}, {{2, 3, 5}, -1}, {{1, 3, 5}, 1}};
  return SkeletalComplex("s2_five_vertex", 2, std::move(s), std::move(o));
}

SkeletalComplex make_tetra() {
  SkeletalComplex::Orientation o{
      {{1, 2, 3}, -1}, {{1, 2, 4}, 1}, {{1, 3, 4}, -1}, {{2, 3, 4}, 1}};
  return SkeletalComplex("s2_tetra", 2, all_subsets(4, 2), std::move(o));
}

SkeletalComplex make_pentachoron() {
  return SkeletalComplex("s3_pentachoron", 3, all_subsets(5, 3));
}

std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    Simplex f;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip) f.push_back(s[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::map<Simplex, std::vector<Simplex>> faces_by_edge(const SkeletalComplex& c) {
  std::map<Simplex, std::vector<Simplex>> out;
  for (const Simplex& f : c.simplices(2)) {
    for (Simplex& e : facets(f)) out[e].push_back(f);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"s2_five_vertex", "s2_tetra", "s3_pentachoron"};
  return names;
}

SkeletalComplex build_builtin(const std::string& name) {
  std::optional<SkeletalComplex> c;
  if (name == "s2_five_vertex") c = make_five_vertex();
  if (name == "s2_tetra") c = make_tetra();
  if (name == "s3_pentachoron") c = make_pentachoron();
  if (!c) throw InvalidArgument("unknown built-in complex '" + name + "'");
  if (!validate(*c).ok()) throw ValidationError("built-in complex '" + name + "' is invalid");
  return *c;
}

int induced_edge_sign(const Simplex& face, int face_sign, VertexId a, VertexId b) {
  if (face.size() != 3) return 0;
  const VertexId i = face[0], j = face[1], k = face[2];
  const auto forward = [&](VertexId p, VertexId q) { return a == p && b == q; };
  if (forward(i, j) || forward(j, k) || forward(k, i)) return face_sign;
  if (forward(j, i) || forward(k, j) || forward(i, k)) return -face_sign;
  return 0;
}

ValidationReport validate(const SkeletalComplex& c) {
  ValidationReport report;
  const auto add = [&](ValidationIssue::Kind kind, const Simplex& s, std::string msg) {
    report.issues.push_back({kind, s, std::move(msg)});
  };
  for (int k = 1; k <= c.dim(); ++k) {
    for (const Simplex& s : c.simplices(k)) {
      bool increasing = s.front() > 0;
      for (std::size_t i = 1; i < s.size(); ++i) increasing = increasing && s[i - 1] < s[i];
      if (!increasing) {
        add(ValidationIssue::Kind::kOrdering, s,
            "simplex " + simplex_key(s) + " is not a strictly increasing tuple of positive ids");
        continue;
      }
      if (k == 1) continue;
      for (const Simplex& f : facets(s)) {
        if (!c.contains(f)) {
          add(ValidationIssue::Kind::kClosure, f,
              "face " + simplex_key(f) + " of " + simplex_key(s) + " is not listed");
        }
      }
    }
  }
  if (!c.orientation()) return report;
  const auto& o = *c.orientation();
  if (c.dim() != 2) {
    add(ValidationIssue::Kind::kOrientation, {}, "orientation is only supported on 2D complexes");
    return report;
  }
  for (const auto& [face, sign] : o) {
    if (!c.simplices(2).count(face)) {
      add(ValidationIssue::Kind::kOrientation, face,
          "orientation names " + simplex_key(face) + ", which is not a face");
    } else if (sign != 1 && sign != -1) {
      add(ValidationIssue::Kind::kOrientation, face, "orientation sign must be +1 or -1");
    }
  }
  for (const Simplex& f : c.simplices(2)) {
    if (!o.count(f)) {
      add(ValidationIssue::Kind::kOrientation, f, "face " + simplex_key(f) + " has no orientation");
    }
  }
  for (const auto& [edge, faces] : faces_by_edge(c)) {
    if (faces.size() != 2) continue;
    const auto s0 = o.find(faces[0]);
    const auto s1 = o.find(faces[1]);
    if (s0 == o.end() || s1 == o.end()) continue;
    const int sum = induced_edge_sign(faces[0], s0->second, edge[0], edge[1]) +
                    induced_edge_sign(faces[1], s1->second, edge[0], edge[1]);
    if (sum != 0) {
      add(ValidationIssue::Kind::kOrientation, edge,
          "faces " + simplex_key(faces[0]) + " and " + simplex_key(faces[1]) +
              " induce the same direction on edge " + simplex_key(edge));
    }
  }
  return report;
}

std::vector<OrientedFace> oriented_faces(const SkeletalComplex& c) {
  if (c.dim() != 2) throw InvalidArgument("oriented faces need a 2D complex");
  if (!c.orientation()) throw InvalidArgument("complex '" + c.name() + "' has no orientation");
  std::vector<OrientedFace> out;
  for (const Simplex& f : c.simplices(2)) {
    const auto it = c.orientation()->find(f);
    if (it == c.orientation()->end()) {
      throw ValidationError("face " + simplex_key(f) + " has no orientation");
    }
    out.push_back({f, it->second});
  }
  return out;
}

bool is_closed_surface(const SkeletalComplex& c) {
  if (c.dim() != 2) return false;
  const auto by_edge = faces_by_edge(c);
  for (const Simplex& e : c.simplices(1)) {
    const auto it = by_edge.find(e);
    if (it == by_edge.end() || it->second.size() != 2) return false;
  }
  return true;
}

std::optional<SkeletalComplex::Orientation> orient_coherently(const SkeletalComplex& c) {
  if (c.dim() != 2) return std::nullopt;
  const auto by_edge = faces_by_edge(c);
  SkeletalComplex::Orientation o;
  for (const Simplex& seed : c.simplices(2)) {
    if (o.count(seed)) continue;
    o[seed] = 1;
    std::deque<Simplex> queue{seed};
    while (!queue.empty()) {
      const Simplex f = queue.front();
      queue.pop_front();
      for (const Simplex& e : facets(f)) {
        const auto& incident = by_edge.at(e);
        if (incident.size() > 2) return std::nullopt;
        for (const Simplex& g : incident) {
          if (g == f) continue;
          // g must induce the opposite direction on e.
          const int want = -induced_edge_sign(f, o[f], e[0], e[1]);
          const int sign = induced_edge_sign(g, 1, e[0], e[1]) == want ? 1 : -1;
          const auto it = o.find(g);
          if (it == o.end()) {
            o[g] = sign;
            queue.push_back(g);
          } else if (it->second != sign) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return o;
}

}  // namespace hlgf
