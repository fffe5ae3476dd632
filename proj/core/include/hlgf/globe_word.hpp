#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hlgf/complex.hpp"

namespace hlgf {

enum class Side : std::uint8_t { kMinus, kPlus };

// Free expression tree over generating simplices of paths.
// A generator on a tuple of length k+2 is a (k+1)-globe.
// Compose(j, a, b) means b first, then a.
class GlobeWord {
 public:
  enum class Kind : std::uint8_t { kVertex, kGenerator, kDegenerate, kCompose, kInvert };

  static GlobeWord vertex(VertexId v);
  // Tuple must be strictly increasing, of length 2..4.
  static GlobeWord generator(Simplex simplex);

  Kind kind() const noexcept;
  int dim() const noexcept;
  VertexId vertex_id() const;
  const Simplex& simplex() const;
  // Gluing level for Compose and Invert; source dimension i for Degenerate(i, k).
  int level() const;
  const GlobeWord& child() const;
  // Compose only: left happens second, right first.
  const GlobeWord& left() const;
  const GlobeWord& right() const;

  // Grammar text; parse_word(to_string()) rebuilds the same tree.
  std::string to_string() const;

  friend bool operator==(const GlobeWord& a, const GlobeWord& b);

 private:
  struct Node;
  explicit GlobeWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct WordBuilder;
  friend GlobeWord compose(const GlobeWord&, const GlobeWord&, int);
  friend GlobeWord invert(const GlobeWord&, int);
  friend GlobeWord degenerate(const GlobeWord&, int, int);
};

// d_j^sign. Requires j < dim.
GlobeWord face(const GlobeWord& w, int level, Side side);

// Checked constructors; no rewriting.
GlobeWord compose(const GlobeWord& a, const GlobeWord& b, int level);
GlobeWord invert(const GlobeWord& a, int level);
// s_{i,k}: requires dim a = i and i < k <= 3.
GlobeWord degenerate(const GlobeWord& a, int from, int to);

struct DirectedEdge {
  VertexId from;
  VertexId to;
  bool operator==(const DirectedEdge&) const = default;
};

// Reduced edge path in the free groupoid on the 1-skeleton.
struct EdgePath {
  VertexId start;
  VertexId end;
  std::vector<DirectedEdge> edges;
  bool operator==(const EdgePath&) const = default;
};

// Thin class of a dim-1 word (or the empty path of a dim-0 word).
EdgePath reduce_path(const GlobeWord& w);

// Equality of boundaries as used by composability: vertices, reduced paths, or structure.
bool boundaries_match(const GlobeWord& x, const GlobeWord& y);

// Word for an edge path: an edge a -> b is G_ba when a > b, else inv0(G_ab).
// The empty path is s01(v_start).
GlobeWord path_word(const EdgePath& p);
GlobeWord path_word(VertexId start, const std::vector<DirectedEdge>& edges);

struct FaceOccurrence {
  Simplex face;
  int sign;
};

// Dim-2 generators in w with sign (-1)^(number of enclosing inversions).
std::vector<FaceOccurrence> face_coverage(const GlobeWord& w);

}  // namespace hlgf
