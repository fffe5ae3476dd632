#include "hlgf/sweep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "hlgf/errors.hpp"

namespace hlgf {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge undirected(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<DirectedEdge> one_edge(VertexId a, VertexId b) { return {{a, b}}; }

EdgePath reduced(VertexId start, const std::vector<DirectedEdge>& edges) {
  EdgePath p{start, start, {}};
  for (const auto& e : edges) {
    if (!p.edges.empty() && p.edges.back().from == e.to && p.edges.back().to == e.from) {
      p.edges.pop_back();
    } else {
      p.edges.push_back(e);
    }
    p.end = e.to;
  }
  return p;
}

GlobeWord whisker(const GlobeWord& move, VertexId start, const std::vector<DirectedEdge>& before,
                  const std::vector<DirectedEdge>& after) {
  GlobeWord w = move;
  if (!before.empty()) w = compose(w, degenerate(path_word(start, before), 1, 2), 0);
  if (!after.empty()) {
    w = compose(degenerate(path_word(after.front().from, after), 1, 2), w, 0);
  }
  return w;
}

// Face whose positive boundary traverses a -> b.
std::optional<Simplex> face_left_of(const SkeletalComplex& c, VertexId a, VertexId b) {
  for (const auto& [face, sign] : *c.orientation()) {
    if (induced_edge_sign(face, sign, a, b) == 1) return face;
  }
  return std::nullopt;
}

void require_sphere(const SkeletalComplex& c) {
  if (c.dim() != 2) throw InvalidArgument("sweeping words need a 2D complex");
  if (!c.orientation()) throw InvalidArgument("sweeping words need an oriented complex");
  if (!validate(c).ok()) throw ValidationError("complex '" + c.name() + "' is invalid");
  if (!is_closed_surface(c)) throw InvalidArgument("complex '" + c.name() + "' is not closed");
  const auto euler = static_cast<long>(c.vertices().size()) -
                     static_cast<long>(c.simplices(1).size()) +
                     static_cast<long>(c.simplices(2).size());
  if (euler != 2) throw InvalidArgument("complex '" + c.name() + "' is not a sphere");
}

struct Disk {
  std::set<Simplex> faces;
  std::set<VertexId> vertices;
  std::set<Edge> edges;
};

// BFS tree inside a disk; parent pointers toward root.
std::map<VertexId, VertexId> bfs_tree(const Disk& d, VertexId root) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [a, b] : d.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  std::map<VertexId, VertexId> parent{{root, root}};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (parent.emplace(w, v).second) queue.push_back(w);
    }
  }
  return parent;
}

// Tree path from x up to the root.
std::vector<DirectedEdge> path_to_root(const std::map<VertexId, VertexId>& parent, VertexId x) {
  std::vector<DirectedEdge> out;
  while (parent.at(x) != x) {
    out.push_back({x, parent.at(x)});
    x = parent.at(x);
  }
  return out;
}

std::vector<DirectedEdge> reversed(std::vector<DirectedEdge> p) {
  std::reverse(p.begin(), p.end());
  for (auto& e : p) std::swap(e.from, e.to);
  return p;
}

struct SweepResult {
  EdgePath start;
  std::vector<GlobeWord> moves;
};

std::optional<SweepResult> sweep(const SkeletalComplex& c, const std::vector<VertexId>& cycle,
                                 const Disk& left, const Disk& right, VertexId north,
                                 VertexId south) {
  const auto to_north = bfs_tree(left, north);
  const auto from_south = bfs_tree(right, south);
  std::vector<EdgePath> meridians;
  for (VertexId x : cycle) {
    if (!to_north.count(x) || !from_south.count(x)) return std::nullopt;
    std::vector<DirectedEdge> path = reversed(path_to_root(from_south, x));
    const auto up = path_to_root(to_north, x);
    path.insert(path.end(), up.begin(), up.end());
    meridians.push_back(reduced(south, path));
  }

  SweepResult out{meridians.front(), {}};
  std::set<Simplex> swept;
  EdgePath current = meridians.front();
  const std::size_t budget = 4 * c.simplices(2).size() + 4;
  for (std::size_t t = 1; t <= meridians.size(); ++t) {
    const EdgePath& target = meridians[t % meridians.size()];
    std::set<Edge> target_edges;
    for (const auto& e : target.edges) target_edges.insert(undirected(e.from, e.to));
    while (!(current == target)) {
      if (out.moves.size() > budget) return std::nullopt;
      bool moved = false;
      for (std::size_t p = 0; p < current.edges.size() && !moved; ++p) {
        const DirectedEdge e = current.edges[p];
        if (target_edges.count(undirected(e.from, e.to))) continue;
        const auto right_face = face_left_of(c, e.to, e.from);
        if (!right_face || swept.count(*right_face)) continue;
        const std::vector<DirectedEdge> before(current.edges.begin(), current.edges.begin() + p);
        const std::vector<DirectedEdge> after(current.edges.begin() + p + 1, current.edges.end());
        out.moves.push_back(whisker(push_across_face(*right_face, e.from, e.to), current.start,
                                    before, after));
        swept.insert(*right_face);
        VertexId apex = 0;
        for (VertexId v : *right_face) {
          if (v != e.from && v != e.to) apex = v;
        }
        std::vector<DirectedEdge> next = before;
        next.push_back({e.from, apex});
        next.push_back({apex, e.to});
        next.insert(next.end(), after.begin(), after.end());
        current = reduced(current.start, next);
        moved = true;
      }
      if (!moved) return std::nullopt;
    }
  }
  if (swept.size() != c.simplices(2).size()) return std::nullopt;
  return out;
}

}  // namespace

GlobeWord push_across_face(const Simplex& tri, VertexId from, VertexId to) {
  if (tri.size() != 3 || from == to ||
      std::count(tri.begin(), tri.end(), from) + std::count(tri.begin(), tri.end(), to) != 2) {
    throw InvalidArgument("edge does not belong to face " + simplex_key(tri));
  }
  VertexId apex = 0;
  for (VertexId v : tri) {
    if (v != from && v != to) apex = v;
  }
  const EdgePath want_src{from, to, one_edge(from, to)};
  const EdgePath want_tgt{from, to, {{from, apex}, {apex, to}}};
  const GlobeWord g = GlobeWord::generator(tri);
  const GlobeWord variants[] = {g, invert(g, 1), invert(g, 0), invert(invert(g, 1), 0)};
  for (const GlobeWord& v : variants) {
    const VertexId p = face(v, 0, Side::kMinus).vertex_id();
    const VertexId q = face(v, 0, Side::kPlus).vertex_id();
    GlobeWord w = v;
    if (p != from) w = compose(w, degenerate(path_word(from, one_edge(from, p)), 1, 2), 0);
    if (q != to) w = compose(degenerate(path_word(q, one_edge(q, to)), 1, 2), w, 0);
    if (reduce_path(face(w, 1, Side::kMinus)) == want_src &&
        reduce_path(face(w, 1, Side::kPlus)) == want_tgt) {
      return w;
    }
  }
  throw Error("no push move for face " + simplex_key(tri));
}

GlobeWord meridian_family_word(const SkeletalComplex& c, const std::vector<VertexId>& cycle) {
  require_sphere(c);
  if (cycle.size() < 3) throw InvalidArgument("equator cycle needs at least 3 vertices");
  if (std::set<VertexId>(cycle.begin(), cycle.end()).size() != cycle.size()) {
    throw InvalidArgument("equator cycle repeats a vertex");
  }
  std::set<Edge> cut;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const VertexId a = cycle[t], b = cycle[(t + 1) % cycle.size()];
    if (!c.contains({std::min(a, b), std::max(a, b)})) {
      throw InvalidArgument("equator cycle is not closed: no edge " + simplex_key({a, b}));
    }
    cut.insert(undirected(a, b));
  }

  // Components of faces glued along edges off the cycle.
  std::map<Simplex, int> component;
  int components = 0;
  for (const Simplex& seed : c.simplices(2)) {
    if (component.count(seed)) continue;
    component[seed] = components;
    std::deque<Simplex> queue{seed};
    while (!queue.empty()) {
      const Simplex f = queue.front();
      queue.pop_front();
      for (const Simplex& g : c.simplices(2)) {
        if (component.count(g)) continue;
        std::vector<VertexId> shared;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(shared));
        if (shared.size() == 2 && !cut.count(undirected(shared[0], shared[1]))) {
          component[g] = components;
          queue.push_back(g);
        }
      }
    }
    ++components;
  }
  const auto side_component = [&](bool left_side) {
    std::set<int> ids;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const VertexId a = cycle[t], b = cycle[(t + 1) % cycle.size()];
      ids.insert(component.at(*face_left_of(c, left_side ? a : b, left_side ? b : a)));
    }
    return ids;
  };
  const auto left_ids = side_component(true);
  const auto right_ids = side_component(false);
  if (components != 2 || left_ids.size() != 1 || right_ids.size() != 1 || left_ids == right_ids) {
    throw InvalidArgument("equator cycle does not separate the complex into two disks");
  }
  Disk left, right;
  for (const auto& [f, id] : component) {
    Disk& d = id == *left_ids.begin() ? left : right;
    d.faces.insert(f);
    d.vertices.insert(f.begin(), f.end());
    d.edges.insert(undirected(f[0], f[1]));
    d.edges.insert(undirected(f[1], f[2]));
    d.edges.insert(undirected(f[0], f[2]));
  }

  const std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
  const auto base_candidates = [&](const Disk& d) {
    std::vector<VertexId> interior, boundary;
    for (auto it = d.vertices.rbegin(); it != d.vertices.rend(); ++it) {
      (on_cycle.count(*it) ? boundary : interior).push_back(*it);
    }
    interior.insert(interior.end(), boundary.begin(), boundary.end());
    return interior;
  };
  for (VertexId north : base_candidates(left)) {
    for (VertexId south : base_candidates(right)) {
      if (north == south) continue;
      const auto result = sweep(c, cycle, left, right, north, south);
      if (!result) continue;
      const GlobeWord meridian = degenerate(path_word(result->start), 1, 2);
      GlobeWord w = meridian;
      for (const GlobeWord& m : result->moves) w = compose(m, w, 1);
      return compose(meridian, w, 1);
    }
  }
  throw Error("could not build a sweeping word for complex '" + c.name() + "'");
}

std::vector<VertexId> default_equator(const SkeletalComplex& c) {
  require_sphere(c);
  const VertexId top = c.vertices().back();
  std::map<VertexId, VertexId> next;
  for (const auto& [face, sign] : *c.orientation()) {
    if (!std::count(face.begin(), face.end(), top)) continue;
    std::vector<VertexId> rim;
    for (VertexId v : face) {
      if (v != top) rim.push_back(v);
    }
    if (induced_edge_sign(face, sign, rim[0], rim[1]) == 1) {
      next[rim[0]] = rim[1];
    } else {
      next[rim[1]] = rim[0];
    }
  }
  std::vector<VertexId> cycle;
  VertexId v = next.rbegin()->first;
  do {
    cycle.push_back(v);
    v = next.at(v);
  } while (v != cycle.front() && cycle.size() <= next.size());
  if (cycle.size() != next.size()) throw InvalidArgument("link of the top vertex is not a cycle");
  return cycle;
}

GlobeWord covering_word(const SkeletalComplex& c) {
  return meridian_family_word(c, default_equator(c));
}

GlobeWord tetra_boundary_word(const SkeletalComplex& c, const Simplex& t) {
  if (c.dim() != 3) throw InvalidArgument("tetrahedron words need a 3D complex");
  if (t.size() != 4 || !c.contains(t)) {
    throw InvalidArgument("tetrahedron " + simplex_key(t) + " is not a 3-simplex of the complex");
  }
  const GlobeWord g = GlobeWord::generator(t);
  const GlobeWord sphere =
      compose(invert(face(g, 2, Side::kPlus), 1), face(g, 2, Side::kMinus), 1);
  const GlobeWord back = invert(degenerate(face(g, 1, Side::kMinus), 1, 2), 0);
  return compose(back, sphere, 0);
}

}  // namespace hlgf
