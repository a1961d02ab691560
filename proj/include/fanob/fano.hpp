#pragma once

#include <variant>
#include <vector>

#include "fanob/polytope.hpp"

namespace fanob {

// Full-dimensional lattice polytope with primitive vertices and the
// origin strictly interior.
struct FanoPolytope {
  VPolytope poly;
  int dim = 0;

  std::vector<LatVec> vertices() const { return poly.lattice_vertices(); }
};

enum class FanoFailure { DimensionDrop, OriginNotInterior, NonPrimitiveVertex };

const char* fano_failure_name(FanoFailure f);

using FanoResult = std::variant<FanoPolytope, FanoFailure>;

// Hull the points, then require full dimension, primitive hull vertices
// and the origin strictly interior. Failures are values, not exceptions.
FanoResult validate_fano(const std::vector<LatVec>& points);

// Generators of one maximal cone of the face fan: the vertex set of one
// facet of P.
struct MaximalCone {
  std::vector<LatVec> generators;
};

std::vector<MaximalCone> face_fan_cones(const FanoPolytope& p);

// Both conventions kept so the non-primitivized reading stays auditable.
struct ConeBarycenter {
  LatVec raw_sum;
  LatVec primitive;
};

// Throws "cone barycenter undefined" when the generator sum is zero.
ConeBarycenter cone_barycenter(const MaximalCone& c);

// Hull of the primitivized cone barycenters. Lattice but not
// necessarily Fano; may drop dimension or lose the origin.
VPolytope b_transform(const FanoPolytope& p);

FanoResult b_transform_fano(const FanoPolytope& p);

// centroid(dual(P)) == 0, exactly.
bool is_kahler_einstein(const FanoPolytope& p);

// Least l >= 1 such that l * dual(P) is a lattice polytope.
Int gorenstein_index(const FanoPolytope& p);

struct AutomorphismGroup {
  std::vector<UnimodularMap> elements;  // contains the identity

  int order() const { return static_cast<int>(elements.size()); }
};

// Full vertex-set stabilizer in GL_d(Z), by solving U*B0 = T over all
// ordered vertex d-tuples T against one fixed independent tuple B0.
AutomorphismGroup automorphisms(const FanoPolytope& p);

// True iff the common fixed subspace of Aut(P) is trivial.
bool is_symmetric(const FanoPolytope& p);

// 2D only: Aut(P) has an element with det +1 other than the identity.
bool has_nontrivial_rotation(const FanoPolytope& p);

// Every facet has exactly d vertices forming a lattice basis.
bool is_smooth(const FanoPolytope& p);

// 2D only, vertices counterclockwise:
// g(i) = ord(v_{i-1},v_i) + ord(v_i,v_{i+1}) - ord(v_{i+1},v_{i-1}).
std::vector<Int> g_values(const FanoPolytope& p);

// All g(i) > 0. Sufficient for one more Fano B-step, not necessary.
bool cond_b1(const FanoPolytope& p);

// S_{m,n} = conv{(m+1,-m),(-m,m+1),(-n-1,n),(n,-n-1)}.
FanoPolytope s_mn(const Int& m, const Int& n);

// conv{(a,-b),(0,1),(-a,b-1)}; throws when the result is not Fano.
FanoPolytope ke_triangle_normal_form(const Int& a, const Int& b);

}  // namespace fanob
