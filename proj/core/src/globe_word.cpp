#include "hlgf/globe_word.hpp"

#include <algorithm>

#include "hlgf/errors.hpp"

namespace hlgf {

struct GlobeWord::Node {
  Kind kind;
  int dim;
  VertexId vertex = 0;
  Simplex simplex;
  int level = 0;
  std::vector<GlobeWord> kids;
};

namespace {

std::string lvl(int l) { return std::to_string(l); }

}  // namespace

GlobeWord GlobeWord::vertex(VertexId v) {
  if (v <= 0) throw InvalidArgument("vertex ids must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVertex;
  n->dim = 0;
  n->vertex = v;
  return GlobeWord(std::move(n));
}

GlobeWord GlobeWord::generator(Simplex simplex) {
  if (simplex.size() < 2 || simplex.size() > 4) {
    throw InvalidArgument("generator tuples have 2 to 4 vertices");
  }
  if (simplex.front() <= 0 || !std::is_sorted(simplex.begin(), simplex.end()) ||
      std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) {
    throw InvalidArgument("generator " + simplex_key(simplex) + " is not strictly increasing");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kGenerator;
  n->dim = static_cast<int>(simplex.size()) - 1;
  n->simplex = std::move(simplex);
  return GlobeWord(std::move(n));
}

GlobeWord::Kind GlobeWord::kind() const noexcept { return node_->kind; }
int GlobeWord::dim() const noexcept { return node_->dim; }

VertexId GlobeWord::vertex_id() const {
  if (kind() != Kind::kVertex) throw InvalidArgument("not a vertex word");
  return node_->vertex;
}

const Simplex& GlobeWord::simplex() const {
  if (kind() != Kind::kGenerator) throw InvalidArgument("not a generator word");
  return node_->simplex;
}

int GlobeWord::level() const {
  if (kind() == Kind::kVertex || kind() == Kind::kGenerator) {
    throw InvalidArgument("word has no level");
  }
  return node_->level;
}

const GlobeWord& GlobeWord::child() const {
  if (kind() != Kind::kDegenerate && kind() != Kind::kInvert) {
    throw InvalidArgument("word has no single child");
  }
  return node_->kids[0];
}

const GlobeWord& GlobeWord::left() const {
  if (kind() != Kind::kCompose) throw InvalidArgument("not a composite word");
  return node_->kids[0];
}

const GlobeWord& GlobeWord::right() const {
  if (kind() != Kind::kCompose) throw InvalidArgument("not a composite word");
  return node_->kids[1];
}

std::string GlobeWord::to_string() const {
  switch (kind()) {
    case Kind::kVertex:
      return "v" + std::to_string(node_->vertex);
    case Kind::kGenerator: {
      const Simplex& s = node_->simplex;
      if (std::all_of(s.begin(), s.end(), [](VertexId v) { return v < 10; })) {
        return "G" + simplex_key(s);
      }
      return "G[" + simplex_key(s) + "]";
    }
    case Kind::kDegenerate:
      return "s" + lvl(node_->level) + lvl(node_->dim) + "(" + node_->kids[0].to_string() + ")";
    case Kind::kInvert:
      return "inv" + lvl(node_->level) + "(" + node_->kids[0].to_string() + ")";
    case Kind::kCompose:
      return "(" + node_->kids[0].to_string() + " o" + lvl(node_->level) + " " +
             node_->kids[1].to_string() + ")";
  }
  return {};
}

bool operator==(const GlobeWord& a, const GlobeWord& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.dim != y.dim || x.level != y.level || x.vertex != y.vertex ||
      x.simplex != y.simplex || x.kids.size() != y.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

// Unchecked builder used where well-typedness follows from the globular identities.
struct WordBuilder {
  static GlobeWord compose(const GlobeWord& a, const GlobeWord& b, int level) {
    auto n = std::make_shared<GlobeWord::Node>();
    n->kind = GlobeWord::Kind::kCompose;
    n->dim = a.dim();
    n->level = level;
    n->kids = {a, b};
    return GlobeWord(std::move(n));
  }
};

namespace {

GlobeWord make_gen(std::initializer_list<VertexId> vs) { return GlobeWord::generator(Simplex(vs)); }

}  // namespace

GlobeWord compose(const GlobeWord& a, const GlobeWord& b, int level) {
  if (a.dim() != b.dim()) {
    throw ComposabilityError("cannot compose words of dimensions " + std::to_string(a.dim()) +
                             " and " + std::to_string(b.dim()));
  }
  if (level < 0 || level >= a.dim()) {
    throw ComposabilityError("composition level " + std::to_string(level) +
                             " out of range for dimension " + std::to_string(a.dim()));
  }
  if (!boundaries_match(face(b, level, Side::kPlus), face(a, level, Side::kMinus))) {
    throw ComposabilityError("not composable at level " + std::to_string(level) + ": target of " +
                             b.to_string() + " differs from source of " + a.to_string());
  }
  return WordBuilder::compose(a, b, level);
}

GlobeWord invert(const GlobeWord& a, int level) {
  if (level < 0 || level >= a.dim()) {
    throw ComposabilityError("inversion level " + std::to_string(level) +
                             " out of range for dimension " + std::to_string(a.dim()));
  }
  auto n = std::make_shared<GlobeWord::Node>();
  n->kind = GlobeWord::Kind::kInvert;
  n->dim = a.dim();
  n->level = level;
  n->kids = {a};
  return GlobeWord(std::move(n));
}

GlobeWord degenerate(const GlobeWord& a, int from, int to) {
  if (a.dim() != from || from < 0 || to <= from || to > 3) {
    throw ComposabilityError("degeneracy s" + std::to_string(from) + std::to_string(to) +
                             " does not apply to a word of dimension " + std::to_string(a.dim()));
  }
  auto n = std::make_shared<GlobeWord::Node>();
  n->kind = GlobeWord::Kind::kDegenerate;
  n->dim = to;
  n->level = from;
  n->kids = {a};
  return GlobeWord(std::move(n));
}

namespace {

Side flip(Side s) { return s == Side::kMinus ? Side::kPlus : Side::kMinus; }

GlobeWord unchecked_compose(const GlobeWord& a, const GlobeWord& b, int level) {
  return WordBuilder::compose(a, b, level);
}

GlobeWord generator_face(const Simplex& s, int j, Side side) {
  const bool minus = side == Side::kMinus;
  const int n = static_cast<int>(s.size());
  // d_0 of any generator: the last two vertices.
  if (j == 0) return GlobeWord::vertex(minus ? s[n - 1] : s[n - 2]);
  if (n == 3) {
    const VertexId i = s[0], jj = s[1], k = s[2];
    if (minus) return make_gen({jj, k});
    return unchecked_compose(invert(make_gen({i, jj}), 0), make_gen({i, k}), 0);
  }
  const VertexId i = s[0], jj = s[1], k = s[2], l = s[3];
  if (j == 1) {
    if (minus) return make_gen({k, l});
    return unchecked_compose(invert(make_gen({jj, k}), 0), make_gen({jj, l}), 0);
  }
  if (minus) return make_gen({jj, k, l});
  const GlobeWord back = unchecked_compose(invert(make_gen({i, jj, k}), 0), make_gen({i, jj, l}), 0);
  return unchecked_compose(invert(back, 1), make_gen({i, k, l}), 1);
}

}  // namespace

GlobeWord face(const GlobeWord& w, int j, Side side) {
  if (j < 0 || j >= w.dim()) {
    throw InvalidArgument("face level " + std::to_string(j) + " out of range for dimension " +
                          std::to_string(w.dim()));
  }
  switch (w.kind()) {
    case GlobeWord::Kind::kVertex:
      break;
    case GlobeWord::Kind::kGenerator:
      return generator_face(w.simplex(), j, side);
    case GlobeWord::Kind::kDegenerate: {
      const int i = w.level();
      if (j == i) return w.child();
      if (j < i) return face(w.child(), j, side);
      return degenerate(w.child(), i, j);
    }
    case GlobeWord::Kind::kInvert: {
      const int l = w.level();
      if (j < l) return face(w.child(), j, side);
      if (j == l) return face(w.child(), j, flip(side));
      return invert(face(w.child(), j, side), l);
    }
    case GlobeWord::Kind::kCompose: {
      const int l = w.level();
      if (j <= l) {
        return side == Side::kMinus ? face(w.right(), j, side) : face(w.left(), j, side);
      }
      return unchecked_compose(face(w.left(), j, side), face(w.right(), j, side), l);
    }
  }
  throw InvalidArgument("vertices have no faces");
}

namespace {

void push_reduced(std::vector<DirectedEdge>& stack, const DirectedEdge& e) {
  if (!stack.empty() && stack.back().from == e.to && stack.back().to == e.from) {
    stack.pop_back();
  } else {
    stack.push_back(e);
  }
}

}  // namespace

EdgePath reduce_path(const GlobeWord& w) {
  switch (w.kind()) {
    case GlobeWord::Kind::kVertex:
      return {w.vertex_id(), w.vertex_id(), {}};
    case GlobeWord::Kind::kGenerator:
      if (w.dim() != 1) break;
      return {w.simplex()[1], w.simplex()[0], {{w.simplex()[1], w.simplex()[0]}}};
    case GlobeWord::Kind::kDegenerate:
      if (w.dim() != 1) break;
      return reduce_path(w.child());
    case GlobeWord::Kind::kInvert: {
      if (w.dim() != 1) break;
      EdgePath p = reduce_path(w.child());
      std::reverse(p.edges.begin(), p.edges.end());
      for (auto& e : p.edges) std::swap(e.from, e.to);
      std::swap(p.start, p.end);
      return p;
    }
    case GlobeWord::Kind::kCompose: {
      if (w.dim() != 1) break;
      EdgePath first = reduce_path(w.right());
      const EdgePath second = reduce_path(w.left());
      for (const auto& e : second.edges) push_reduced(first.edges, e);
      first.end = second.end;
      return first;
    }
  }
  throw InvalidArgument("path reduction needs a word of dimension at most 1");
}

bool boundaries_match(const GlobeWord& x, const GlobeWord& y) {
  if (x.dim() != y.dim()) return false;
  if (x.dim() == 0) return x.vertex_id() == y.vertex_id();
  if (x.dim() == 1) return reduce_path(x) == reduce_path(y);
  return x == y;
}

GlobeWord path_word(VertexId start, const std::vector<DirectedEdge>& edges) {
  if (edges.empty()) return degenerate(GlobeWord::vertex(start), 0, 1);
  const auto edge_word = [](const DirectedEdge& e) {
    if (e.from > e.to) return GlobeWord::generator({e.to, e.from});
    return invert(GlobeWord::generator({e.from, e.to}), 0);
  };
  GlobeWord w = edge_word(edges.front());
  for (std::size_t i = 1; i < edges.size(); ++i) w = compose(edge_word(edges[i]), w, 0);
  return w;
}

GlobeWord path_word(const EdgePath& p) { return path_word(p.start, p.edges); }

namespace {

void collect_faces(const GlobeWord& w, int sign, std::vector<FaceOccurrence>& out) {
  switch (w.kind()) {
    case GlobeWord::Kind::kVertex:
      return;
    case GlobeWord::Kind::kGenerator:
      if (w.simplex().size() == 3) out.push_back({w.simplex(), sign});
      return;
    case GlobeWord::Kind::kDegenerate:
      collect_faces(w.child(), sign, out);
      return;
    case GlobeWord::Kind::kInvert:
      collect_faces(w.child(), -sign, out);
      return;
    case GlobeWord::Kind::kCompose:
      collect_faces(w.left(), sign, out);
      collect_faces(w.right(), sign, out);
      return;
  }
}

}  // namespace

std::vector<FaceOccurrence> face_coverage(const GlobeWord& w) {
  std::vector<FaceOccurrence> out;
  collect_faces(w, 1, out);
  return out;
}

}  // namespace hlgf
