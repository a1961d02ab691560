#include "fanob/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fanob {

namespace {

Rat dot(const LatVec& n, const RatVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < n.size(); ++i) s += Rat(n[i]) * x[i];
  return s;
}

Rat cross2(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<RatVec> dedupe(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Monotone chain; returns counterclockwise cycle starting at the
// lexicographic minimum. Input must be deduped+sorted.
std::vector<RatVec> hull_2d(const std::vector<RatVec>& pts) {
  if (pts.size() <= 2) return pts;
  auto build = [](auto begin, auto end) {
    std::vector<RatVec> out;
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 && cross2(out[out.size() - 2], out.back(), *it) <= 0)
        out.pop_back();
      out.push_back(*it);
    }
    return out;
  };
  std::vector<RatVec> lo = build(pts.begin(), pts.end());
  std::vector<RatVec> hi = build(pts.rbegin(), pts.rend());
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

struct RawFacet {
  LatVec normal;
  Rat offset;
  std::vector<int> incident;
};

// Brute-force facet enumeration over d-subsets of a full-dimensional
// point configuration. Adequate at desk scale (d <= 8, modest counts).
std::vector<RawFacet> facets_brute(const std::vector<RatVec>& pts, int d) {
  const int n = static_cast<int>(pts.size());
  std::map<std::pair<LatVec, Rat>, std::vector<int>> seen;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    // normal via cofactor expansion of the (d-1) x d difference matrix
    RatMat diff(d - 1, RatVec(d));
    for (int r = 0; r + 1 < d; ++r)
      for (int c = 0; c < d; ++c)
        diff[r][c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
    RatVec nr(d);
    bool nonzero = false;
    for (int j = 0; j < d; ++j) {
      RatMat minor(d - 1, RatVec(d - 1));
      for (int r = 0; r + 1 < d; ++r) {
        int cc = 0;
        for (int c = 0; c < d; ++c) {
          if (c == j) continue;
          minor[r][cc++] = diff[r][c];
        }
      }
      nr[j] = (j % 2 == 0 ? 1 : -1) * det_rat(minor);
      if (nr[j] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    LatVec nrm = primitive_direction(nr);
    Rat off = dot(nrm, pts[idx[0]]);
    int lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
      Rat v = dot(nrm, pts[i]);
      if (v < off) ++lo;
      else if (v > off) ++hi;
    }
    if (lo > 0 && hi > 0) continue;
    if (hi > 0) {
      nrm = neg(nrm);
      off = -off;
    }
    auto key = std::make_pair(nrm, off);
    if (seen.count(key)) continue;
    std::vector<int> inc;
    for (int i = 0; i < n; ++i)
      if (dot(nrm, pts[i]) == off) inc.push_back(i);
    seen.emplace(key, std::move(inc));
  } while (advance());
  std::vector<RawFacet> out;
  for (auto& [key, inc] : seen)
    out.push_back({key.first, key.second, std::move(inc)});
  return out;
}

// Vertices of a full-dimensional configuration: points whose incident
// facet normals span R^d.
std::vector<int> vertex_ids_from_facets(const std::vector<RatVec>& pts, int d,
                                        const std::vector<RawFacet>& fs) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    RatMat normals;
    for (const auto& f : fs)
      if (std::binary_search(f.incident.begin(), f.incident.end(), i))
        normals.push_back(to_rat(f.normal));
    if (static_cast<int>(normals.size()) >= d && rank_rat(normals) == d)
      out.push_back(i);
  }
  return out;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMat diff;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec row(pts[0].size());
    for (size_t c = 0; c < row.size(); ++c) row[c] = pts[i][c] - pts[0][c];
    diff.push_back(std::move(row));
  }
  return rank_rat(diff);
}

}  // namespace

bool VPolytope::is_lattice() const {
  for (const auto& v : vertices)
    for (const auto& c : v)
      if (c.get_den() != 1) return false;
  return true;
}

std::vector<LatVec> VPolytope::lattice_vertices() const {
  std::vector<LatVec> out;
  for (const auto& v : vertices) {
    LatVec lv(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].get_den() != 1)
        throw std::invalid_argument("lattice_vertices: non-integral vertex");
      lv[i] = v[i].get_num();
    }
    out.push_back(std::move(lv));
  }
  return out;
}

VPolytope hull(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list");
  const int d = static_cast<int>(points[0].size());
  if (d < 1) throw std::invalid_argument("hull: zero-dimensional ambient space");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d)
      throw DimensionMismatch("hull: mixed point dimensions");

  std::vector<RatVec> pts = dedupe(points);
  const int adim = affine_rank(pts);

  VPolytope out;
  out.ambient_dim = d;
  out.affine_dim = adim;

  if (adim == 0) {
    out.vertices = {pts[0]};
    return out;
  }

  if (adim == d && d == 2) {
    out.vertices = hull_2d(pts);
    return out;
  }

  if (adim == d) {
    if (d == 1) {
      out.vertices = {pts.front(), pts.back()};
      return out;
    }
    auto fs = facets_brute(pts, d);
    for (int i : vertex_ids_from_facets(pts, d, fs)) out.vertices.push_back(pts[i]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }

  // Degenerate: express points in coordinates of the affine span and recurse.
  const RatVec& base = pts[0];
  RatMat basis;  // rows are independent difference vectors
  for (size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < adim; ++i) {
    RatVec row(d);
    for (int c = 0; c < d; ++c) row[c] = pts[i][c] - base[c];
    basis.push_back(row);
    if (rank_rat(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  RatMat gram(adim, RatVec(adim, 0));
  for (int i = 0; i < adim; ++i)
    for (int j = 0; j < adim; ++j)
      for (int c = 0; c < d; ++c) gram[i][j] += basis[i][c] * basis[j][c];
  RatMat gram_inv = inverse_rat(gram);
  std::vector<RatVec> reduced;
  for (const auto& p : pts) {
    RatVec rhs(adim, 0);
    for (int i = 0; i < adim; ++i)
      for (int c = 0; c < d; ++c) rhs[i] += basis[i][c] * (p[c] - base[c]);
    RatVec coord(adim, 0);
    for (int i = 0; i < adim; ++i)
      for (int j = 0; j < adim; ++j) coord[i] += gram_inv[i][j] * rhs[j];
    reduced.push_back(std::move(coord));
  }
  VPolytope sub = hull(reduced);
  for (const auto& rv : sub.vertices) {
    auto it = std::find(reduced.begin(), reduced.end(), rv);
    out.vertices.push_back(pts[it - reduced.begin()]);
  }
  return out;
}

VPolytope hull_lattice(const std::vector<LatVec>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  return hull(pts);
}

FacetStructure facets(const VPolytope& p) {
  if (p.affine_dim != p.ambient_dim)
    throw std::invalid_argument("facets: degenerate polytope");
  const int d = p.ambient_dim;
  FacetStructure out;
  if (d == 1) {
    out.facets.push_back({{LatVec{Int(-1)}, -p.vertices[0][0]}, {0}});
    out.facets.push_back({{LatVec{Int(1)}, p.vertices[1][0]}, {1}});
    return out;
  }
  if (d == 2) {
    const int n = static_cast<int>(p.vertices.size());
    for (int i = 0; i < n; ++i) {
      const RatVec& a = p.vertices[i];
      const RatVec& b = p.vertices[(i + 1) % n];
      RatVec nr{b[1] - a[1], a[0] - b[0]};  // outward for ccw order
      LatVec nrm = primitive_direction(nr);
      out.facets.push_back({{nrm, dot(nrm, a)}, {i, (i + 1) % n}});
    }
    return out;
  }
  auto fs = facets_brute(p.vertices, d);
  // deterministic facet order: by (normal, offset)
  std::sort(fs.begin(), fs.end(), [](const RawFacet& a, const RawFacet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  for (auto& f : fs) out.facets.push_back({{f.normal, f.offset}, f.incident});
  return out;
}

bool contains_origin_interior(const VPolytope& p) {
  if (p.affine_dim != p.ambient_dim) return false;
  for (const auto& f : facets(p).facets)
    if (!(f.half_space.offset > 0)) return false;
  return true;
}

bool origin_interior_order2(const VPolytope& p) {
  if (p.ambient_dim != 2 || p.affine_dim != 2)
    throw std::invalid_argument("origin_interior_order2: 2D only");
  const int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    const RatVec& a = p.vertices[i];
    const RatVec& b = p.vertices[(i + 1) % n];
    if (!(a[0] * b[1] - a[1] * b[0] > 0)) return false;
  }
  return true;
}

VPolytope dual(const VPolytope& p) {
  auto fs = facets(p).facets;
  for (const auto& f : fs)
    if (!(f.half_space.offset > 0))
      throw std::invalid_argument("dual: origin not strictly interior");
  VPolytope out;
  out.ambient_dim = p.ambient_dim;
  out.affine_dim = p.ambient_dim;
  for (const auto& f : fs) {
    RatVec u(f.half_space.normal.size());
    for (size_t i = 0; i < u.size(); ++i)
      u[i] = Rat(-f.half_space.normal[i]) / f.half_space.offset;
    out.vertices.push_back(std::move(u));
  }
  if (p.ambient_dim == 2) {
    // facet order is the ccw edge cycle; rotate to the lex-min start
    auto mn = std::min_element(out.vertices.begin(), out.vertices.end());
    std::rotate(out.vertices.begin(), mn, out.vertices.end());
  } else {
    std::sort(out.vertices.begin(), out.vertices.end());
  }
  return out;
}

namespace {

// Decompose into d-simplices: apex joined to a recursive triangulation
// of every facet not containing it.
void triangulate(const VPolytope& p, std::vector<std::vector<RatVec>>& out) {
  const int d = p.ambient_dim;
  if (d == 1) {
    out.push_back({p.vertices[0], p.vertices[1]});
    return;
  }
  RatVec apex(d, 0);
  bool origin_apex = contains_origin_interior(p);
  if (!origin_apex) apex = p.vertices[0];
  auto fs = facets(p);
  for (const auto& f : fs.facets) {
    if (!origin_apex) {
      // skip facets containing the apex vertex
      bool has = false;
      for (int id : f.vertex_ids)
        if (p.vertices[id] == apex) has = true;
      if (has) continue;
    }
    if (static_cast<int>(f.vertex_ids.size()) == d) {
      std::vector<RatVec> simplex{apex};
      for (int id : f.vertex_ids) simplex.push_back(p.vertices[id]);
      out.push_back(std::move(simplex));
      continue;
    }
    // non-simplicial facet: triangulate it in its own coordinates
    std::vector<RatVec> fpts;
    for (int id : f.vertex_ids) fpts.push_back(p.vertices[id]);
    VPolytope fp = hull(fpts);  // affine_dim = d-1
    const RatVec& base = fp.vertices[0];
    RatMat basis;
    for (size_t i = 1; i < fp.vertices.size() &&
                       static_cast<int>(basis.size()) < d - 1; ++i) {
      RatVec row(d);
      for (int c = 0; c < d; ++c) row[c] = fp.vertices[i][c] - base[c];
      basis.push_back(row);
      if (rank_rat(basis) < static_cast<int>(basis.size())) basis.pop_back();
    }
    RatMat gram(d - 1, RatVec(d - 1, 0));
    for (int i = 0; i < d - 1; ++i)
      for (int j = 0; j < d - 1; ++j)
        for (int c = 0; c < d; ++c) gram[i][j] += basis[i][c] * basis[j][c];
    RatMat gram_inv = inverse_rat(gram);
    std::vector<RatVec> reduced;
    for (const auto& v : fp.vertices) {
      RatVec rhs(d - 1, 0);
      for (int i = 0; i < d - 1; ++i)
        for (int c = 0; c < d; ++c) rhs[i] += basis[i][c] * (v[c] - base[c]);
      RatVec coord(d - 1, 0);
      for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j < d - 1; ++j) coord[i] += gram_inv[i][j] * rhs[j];
      reduced.push_back(std::move(coord));
    }
    VPolytope sub;
    sub.ambient_dim = d - 1;
    sub.affine_dim = d - 1;
    sub.vertices = reduced;
    std::vector<std::vector<RatVec>> sub_simplices;
    triangulate(sub, sub_simplices);
    for (const auto& s : sub_simplices) {
      std::vector<RatVec> simplex{apex};
      for (const auto& rv : s) {
        auto it = std::find(reduced.begin(), reduced.end(), rv);
        simplex.push_back(fp.vertices[it - reduced.begin()]);
      }
      out.push_back(std::move(simplex));
    }
  }
}

Rat simplex_volume(const std::vector<RatVec>& s) {
  const int d = static_cast<int>(s.size()) - 1;
  RatMat m(d, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int c = 0; c < d; ++c) m[i][c] = s[i + 1][c] - s[0][c];
  Rat v = det_rat(m);
  if (v < 0) v = -v;
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return v / Rat(fact);
}

}  // namespace

Rat volume(const VPolytope& p) {
  if (p.affine_dim != p.ambient_dim)
    throw std::invalid_argument("volume: degenerate polytope");
  std::vector<std::vector<RatVec>> simplices;
  triangulate(p, simplices);
  Rat total = 0;
  for (const auto& s : simplices) total += simplex_volume(s);
  return total;
}

RatVec centroid(const VPolytope& p) {
  if (p.affine_dim != p.ambient_dim)
    throw std::invalid_argument("centroid: degenerate polytope");
  const int d = p.ambient_dim;
  std::vector<std::vector<RatVec>> simplices;
  triangulate(p, simplices);
  Rat total = 0;
  RatVec acc(d, 0);
  for (const auto& s : simplices) {
    Rat v = simplex_volume(s);
    total += v;
    for (int c = 0; c < d; ++c) {
      Rat mean = 0;
      for (const auto& vert : s) mean += vert[c];
      acc[c] += v * mean / Rat(d + 1);
    }
  }
  for (int c = 0; c < d; ++c) acc[c] /= total;
  return acc;
}

}  // namespace fanob
