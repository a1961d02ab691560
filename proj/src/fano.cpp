#include "fanob/fano.hpp"

#include <algorithm>
#include <functional>

namespace fanob {

const char* fano_failure_name(FanoFailure f) {
  switch (f) {
    case FanoFailure::DimensionDrop: return "DimensionDrop";
    case FanoFailure::OriginNotInterior: return "OriginNotInterior";
    case FanoFailure::NonPrimitiveVertex: return "NonPrimitiveVertex";
  }
  return "?";
}

FanoResult validate_fano(const std::vector<LatVec>& points) {
  VPolytope h = hull_lattice(points);
  if (h.affine_dim < h.ambient_dim) return FanoFailure::DimensionDrop;
  for (const auto& v : h.lattice_vertices())
    if (primitive_index(v) != 1) return FanoFailure::NonPrimitiveVertex;
  if (!contains_origin_interior(h)) return FanoFailure::OriginNotInterior;
  int d = h.ambient_dim;
  return FanoPolytope{std::move(h), d};
}

std::vector<MaximalCone> face_fan_cones(const FanoPolytope& p) {
  auto verts = p.vertices();
  std::vector<MaximalCone> out;
  for (const auto& f : facets(p.poly).facets) {
    MaximalCone c;
    for (int id : f.vertex_ids) c.generators.push_back(verts[id]);
    out.push_back(std::move(c));
  }
  return out;
}

ConeBarycenter cone_barycenter(const MaximalCone& c) {
  LatVec sum(c.generators.at(0).size(), 0);
  for (const auto& g : c.generators) sum = add(sum, g);
  if (is_zero(sum)) throw std::invalid_argument("cone barycenter undefined");
  return {sum, primitivize(sum)};
}

VPolytope b_transform(const FanoPolytope& p) {
  std::vector<LatVec> pts;
  for (const auto& c : face_fan_cones(p))
    pts.push_back(cone_barycenter(c).primitive);
  return hull_lattice(pts);
}

FanoResult b_transform_fano(const FanoPolytope& p) {
  std::vector<LatVec> pts;
  for (const auto& c : face_fan_cones(p))
    pts.push_back(cone_barycenter(c).primitive);
  return validate_fano(pts);
}

bool is_kahler_einstein(const FanoPolytope& p) {
  RatVec c = centroid(dual(p.poly));
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Int gorenstein_index(const FanoPolytope& p) {
  Int l = 1;
  for (const auto& v : dual(p.poly).vertices)
    for (const auto& c : v)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

namespace {

// first linearly independent d-tuple of vertices, as matrix columns
IntMat base_columns(const std::vector<LatVec>& verts, int d,
                    std::vector<int>* ids = nullptr) {
  RatMat rows;
  IntMat cols(d, LatVec(d));
  int k = 0;
  for (size_t i = 0; i < verts.size() && k < d; ++i) {
    rows.push_back(to_rat(verts[i]));
    if (rank_rat(rows) < static_cast<int>(rows.size())) {
      rows.pop_back();
      continue;
    }
    for (int r = 0; r < d; ++r) cols[r][k] = verts[i][r];
    if (ids) ids->push_back(static_cast<int>(i));
    ++k;
  }
  if (k < d) throw std::invalid_argument("vertices do not span");
  return cols;
}

}  // namespace

AutomorphismGroup automorphisms(const FanoPolytope& p) {
  const int d = p.dim;
  auto verts = p.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<LatVec> sorted_verts = verts;
  std::sort(sorted_verts.begin(), sorted_verts.end());

  IntMat b0 = base_columns(verts, d);
  RatMat b0r(d, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b0r[i][j] = Rat(b0[i][j]);
  RatMat b0_inv = inverse_rat(b0r);

  AutomorphismGroup out;
  std::vector<int> tup(d, 0);
  std::vector<bool> used(n, false);
  // ordered tuples of distinct vertex indices, depth-first
  std::function<void(int)> rec = [&](int depth) {
    if (depth == d) {
      // U = T * B0^{-1}, integral with |det| = 1, vertex-set preserving
      IntMat u(d, LatVec(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Rat e = 0;
          for (int k = 0; k < d; ++k) e += Rat(verts[tup[k]][i]) * b0_inv[k][j];
          if (e.get_den() != 1) return;
          u[i][j] = e.get_num();
        }
      Int det = det_n(u);
      if (det != 1 && det != -1) return;
      UnimodularMap um(std::move(u));
      std::vector<LatVec> image;
      for (const auto& v : verts) image.push_back(apply_map(um, v));
      std::sort(image.begin(), image.end());
      if (image == sorted_verts) out.elements.push_back(std::move(um));
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tup[depth] = i;
      rec(depth + 1);
      used[i] = false;
    }
  };
  rec(0);
  return out;
}

bool is_symmetric(const FanoPolytope& p) {
  const int d = p.dim;
  RatMat stacked;
  for (const auto& u : automorphisms(p).elements)
    for (int i = 0; i < d; ++i) {
      RatVec row(d);
      for (int j = 0; j < d; ++j)
        row[j] = Rat(u.m[i][j]) - (i == j ? 1 : 0);
      stacked.push_back(std::move(row));
    }
  return rank_rat(stacked) == d;
}

bool has_nontrivial_rotation(const FanoPolytope& p) {
  if (p.dim != 2)
    throw std::invalid_argument("has_nontrivial_rotation: 2D only");
  for (const auto& u : automorphisms(p).elements) {
    if (det_n(u.m) != 1) continue;
    if (u.m[0][0] == 1 && u.m[0][1] == 0 && u.m[1][0] == 0 && u.m[1][1] == 1)
      continue;
    return true;
  }
  return false;
}

bool is_smooth(const FanoPolytope& p) {
  const int d = p.dim;
  auto verts = p.vertices();
  for (const auto& f : facets(p.poly).facets) {
    if (static_cast<int>(f.vertex_ids.size()) != d) return false;
    IntMat m;
    for (int id : f.vertex_ids) m.push_back(verts[id]);
    Int det = det_n(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

std::vector<Int> g_values(const FanoPolytope& p) {
  if (p.dim != 2) throw std::invalid_argument("g_values: 2D only");
  auto v = p.vertices();
  const int n = static_cast<int>(v.size());
  std::vector<Int> out(n);
  for (int i = 0; i < n; ++i) {
    const LatVec& prev = v[(i + n - 1) % n];
    const LatVec& cur = v[i];
    const LatVec& next = v[(i + 1) % n];
    out[i] = order2(prev, cur) + order2(cur, next) - order2(next, prev);
  }
  return out;
}

bool cond_b1(const FanoPolytope& p) {
  for (const auto& g : g_values(p))
    if (!(g > 0)) return false;
  return true;
}

namespace {

FanoPolytope require_fano(const std::vector<LatVec>& pts, const char* what) {
  FanoResult r = validate_fano(pts);
  if (auto* f = std::get_if<FanoPolytope>(&r)) return *f;
  throw std::invalid_argument(std::string(what) + ": not a Fano polytope (" +
                              fano_failure_name(std::get<FanoFailure>(r)) + ")");
}

}  // namespace

FanoPolytope s_mn(const Int& m, const Int& n) {
  if (m < 0 || n < 0) throw std::invalid_argument("s_mn: negative parameter");
  return require_fano({{m + 1, -m}, {-m, m + 1}, {-n - 1, n}, {n, -n - 1}},
                      "s_mn");
}

FanoPolytope ke_triangle_normal_form(const Int& a, const Int& b) {
  return require_fano({{a, -b}, {Int(0), Int(1)}, {-a, b - 1}},
                      "ke_triangle_normal_form");
}

}  // namespace fanob
