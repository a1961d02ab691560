#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fanob {

// Exact arbitrary-precision scalars. All arithmetic in this project is
// exact; there is no floating-point fallback anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using LatVec = std::vector<Int>;   // lattice point, length = ambient dim
using RatVec = std::vector<Rat>;   // rational point
using IntMat = std::vector<LatVec>;  // rows
using RatMat = std::vector<RatVec>;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// gcd of absolute values of all coordinates; 0 for the zero vector.
Int primitive_index(const LatVec& v);

// v / primitive_index(v). Throws on the zero vector.
LatVec primitivize(const LatVec& v);

// 2x2 determinant x_u*y_v - y_u*x_v. Throws unless both vectors are 2D.
Int order2(const LatVec& u, const LatVec& v);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int det_n(const IntMat& rows);

Rat det_rat(RatMat m);
int rank_rat(RatMat m);

// Inverse of a square rational matrix; throws if singular.
RatMat inverse_rat(const RatMat& m);

struct UnimodularMap {
  IntMat m;  // d x d, |det| = 1

  explicit UnimodularMap(IntMat mat);
  int dim() const { return static_cast<int>(m.size()); }
};

LatVec apply_map(const UnimodularMap& u, const LatVec& v);
RatVec apply_map_rat(const UnimodularMap& u, const RatVec& v);
UnimodularMap compose(const UnimodularMap& a, const UnimodularMap& b);

// Left-unimodular Hermite form of a d x n integer matrix: the unique
// representative of { U*M : U in GL_d(Z) } with positive pivots and
// reduced entries above them. Column order is preserved.
IntMat hermite_form(IntMat m);

LatVec add(const LatVec& a, const LatVec& b);
LatVec neg(const LatVec& a);
bool is_zero(const LatVec& a);
RatVec to_rat(const LatVec& v);
// Clears denominators and divides by the content; direction preserved.
LatVec primitive_direction(const RatVec& v);

std::string vec_to_string(const LatVec& v);
std::string vec_to_string(const RatVec& v);

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace fanob
