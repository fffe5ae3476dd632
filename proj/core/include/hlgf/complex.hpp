#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hlgf {

using VertexId = int;
// Vertex tuple; strictly increasing in a valid complex.
using Simplex = std::vector<VertexId>;

std::string simplex_key(const Simplex& s);
// Inverse of simplex_key. Accepts "124" or "1,2,4".
Simplex parse_simplex_key(const std::string& key);

// Ordered simplicial complex of dimension 1..3 with its skeletal filtration.
class SkeletalComplex {
 public:
  using Orientation = std::map<Simplex, int>;

  // simplices[k] holds the k-simplices for k = 1..dim; index 0 is ignored.
  // Stored as given; call validate() to check the invariants.
  SkeletalComplex(std::string name, int dim, std::array<std::set<Simplex>, 4> simplices,
                  std::optional<Orientation> orientation = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::set<Simplex>& simplices(int k) const;
  const std::optional<Orientation>& orientation() const noexcept { return orientation_; }

  bool contains(const Simplex& s) const;
  // Undirected neighbours through 1-simplices, sorted.
  std::vector<VertexId> neighbours(VertexId v) const;

  bool operator==(const SkeletalComplex&) const = default;

 private:
  std::string name_;
  int dim_;
  std::vector<VertexId> vertices_;
  std::array<std::set<Simplex>, 4> simplices_;
  std::optional<Orientation> orientation_;
};

struct ValidationIssue {
  enum class Kind { kClosure, kOrdering, kOrientation };
  Kind kind;
  Simplex simplex;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

struct OrientedFace {
  Simplex face;
  int sign;
};

// Names: s2_five_vertex, s2_tetra, s3_pentachoron.
SkeletalComplex build_builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

ValidationReport validate(const SkeletalComplex& c);

std::vector<OrientedFace> oriented_faces(const SkeletalComplex& c);

// Sign in {+1,-1} that the oriented triangle induces on its edge {a,b}, read as a -> b.
// Zero when {a,b} is not an edge of the triangle.
int induced_edge_sign(const Simplex& face, int face_sign, VertexId a, VertexId b);

// True when every edge lies in exactly two faces (2D only).
bool is_closed_surface(const SkeletalComplex& c);

// A coherent orientation with the smallest face positive, if one exists.
std::optional<SkeletalComplex::Orientation> orient_coherently(const SkeletalComplex& c);

}  // namespace hlgf
