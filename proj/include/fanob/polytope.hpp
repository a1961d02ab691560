#pragma once

#include <optional>
#include <vector>

#include "fanob/numeric.hpp"

namespace fanob {

// Convex polytope in V-representation. Vertices are stored in a
// deterministic order: counterclockwise starting at the lexicographic
// minimum in 2D, lexicographically sorted otherwise.
struct VPolytope {
  int ambient_dim = 0;
  int affine_dim = 0;
  std::vector<RatVec> vertices;

  bool is_lattice() const;
  std::vector<LatVec> lattice_vertices() const;  // throws if not lattice
};

// <normal, x> <= offset with primitive integer (outward) normal.
struct HalfSpace {
  LatVec normal;
  Rat offset;
};

struct Facet {
  HalfSpace half_space;
  std::vector<int> vertex_ids;  // indices into VPolytope::vertices
};

struct FacetStructure {
  std::vector<Facet> facets;
};

// Vertex-minimal convex hull. Lower-dimensional input is legal and
// reduces affine_dim; it is not an error.
VPolytope hull(const std::vector<RatVec>& points);
VPolytope hull_lattice(const std::vector<LatVec>& points);

// Complete irredundant facet list; requires affine_dim == ambient_dim.
// In 2D facets are the edges between cyclically adjacent vertices.
FacetStructure facets(const VPolytope& p);

// True iff every facet inequality is strict at the origin.
// Degenerate polytopes give false.
bool contains_origin_interior(const VPolytope& p);

// 2D-only alternative path: positive order2 for all cyclically adjacent
// vertex pairs. Kept separate so tests can cross-check the two.
bool origin_interior_order2(const VPolytope& p);

// P* = { u : <u,v> >= -1 for all v in P }. Requires the origin strictly
// interior. Involutive on such polytopes.
VPolytope dual(const VPolytope& p);

// Euclidean volume and volume-weighted centroid via a fan triangulation.
// Apex is the origin when interior, else the first vertex; each facet is
// fanned from its first incident vertex.
Rat volume(const VPolytope& p);
RatVec centroid(const VPolytope& p);

}  // namespace fanob
