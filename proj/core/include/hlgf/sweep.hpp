#pragma once

#include <vector>

#include "hlgf/complex.hpp"
#include "hlgf/globe_word.hpp"

namespace hlgf {

// Dim-2 word pushing the edge from -> to across the triangle `face`,
// from the path [from -> to] to the path [from -> c -> to].
GlobeWord push_across_face(const Simplex& face, VertexId from, VertexId to);

// Closed oriented 2D complex; cycle lists vertices of a simple closed edge cycle.
// Result: a dim-2 word sweeping the family of meridians S -> x -> N as x runs once
// along the cycle, with N inside the disk left of the cycle. Level-1 source and
// target are the same literal path word.
GlobeWord meridian_family_word(const SkeletalComplex& c, const std::vector<VertexId>& cycle);

// Default equator: link of the highest vertex, oriented with that vertex on its left.
std::vector<VertexId> default_equator(const SkeletalComplex& c);

// meridian_family_word over the default equator.
GlobeWord covering_word(const SkeletalComplex& c);

// Based dim-2 word for tetrahedron t whose evaluation's winding is the extendibility residual.
GlobeWord tetra_boundary_word(const SkeletalComplex& c, const Simplex& t);

}  // namespace hlgf
