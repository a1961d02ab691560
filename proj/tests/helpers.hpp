#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "fanob/classify.hpp"

namespace fanob::testutil {

using Rng = std::mt19937_64;

inline std::vector<LatVec> sorted_vertex_set(const FanoPolytope& p) {
  auto v = p.vertices();
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<LatVec> sorted_lattice_set(std::vector<LatVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Random Fano polygon with 3..max_k vertices, coordinates in [-bound, bound].
inline FanoPolytope random_fano_polygon(Rng& rng, long bound, int max_k = 6) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> kdist(3, max_k);
  for (;;) {
    int k = kdist(rng);
    std::vector<LatVec> pts;
    for (int i = 0; i < k; ++i) {
      long x = coord(rng), y = coord(rng);
      if (x == 0 && y == 0) continue;
      pts.push_back(primitivize({Int(x), Int(y)}));
    }
    if (static_cast<int>(pts.size()) < 3) continue;
    FanoResult r = validate_fano(pts);
    if (auto* f = std::get_if<FanoPolytope>(&r)) return *f;
  }
}

// Random U in GL_2(Z) as a product of shears and sign/swap moves,
// rejected when an entry exceeds entry_bound.
inline UnimodularMap random_unimodular2(Rng& rng, long entry_bound = 10) {
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<long> shear(-2, 2);
  for (;;) {
    IntMat m{{Int(1), Int(0)}, {Int(0), Int(1)}};
    for (int i = 0; i < 4; ++i) {
      switch (op(rng)) {
        case 0: {  // row1 += s*row2
          long s = shear(rng);
          m[0][0] += s * m[1][0];
          m[0][1] += s * m[1][1];
          break;
        }
        case 1: {
          long s = shear(rng);
          m[1][0] += s * m[0][0];
          m[1][1] += s * m[0][1];
          break;
        }
        case 2:
          std::swap(m[0], m[1]);
          break;
        case 3:
          m[0][0] = -m[0][0];
          m[0][1] = -m[0][1];
          break;
      }
    }
    bool ok = true;
    for (const auto& row : m)
      for (const auto& e : row)
        if (int_abs(e) > entry_bound) ok = false;
    if (ok) return UnimodularMap(std::move(m));
  }
}

inline FanoPolytope apply_to_fano(const UnimodularMap& u, const FanoPolytope& p) {
  std::vector<LatVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(apply_map(u, v));
  return std::get<FanoPolytope>(validate_fano(pts));
}

// Brute-force unimodular-equivalence oracle: search U with
// U * vertexset(a) = vertexset(b) over ordered d-tuples of b's vertices.
inline bool brute_equivalent(const FanoPolytope& a, const FanoPolytope& b) {
  const int d = a.dim;
  if (b.dim != d) return false;
  auto va = a.vertices();
  auto vb = b.vertices();
  if (va.size() != vb.size()) return false;
  auto vb_sorted = sorted_lattice_set(vb);

  // independent d-tuple of a's vertices, as columns
  RatMat rows;
  std::vector<int> base_ids;
  for (size_t i = 0; i < va.size() && static_cast<int>(base_ids.size()) < d; ++i) {
    rows.push_back(to_rat(va[i]));
    if (rank_rat(rows) < static_cast<int>(rows.size())) rows.pop_back();
    else base_ids.push_back(static_cast<int>(i));
  }
  RatMat b0(d, RatVec(d));
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) b0[r][j] = Rat(va[base_ids[j]][r]);
  RatMat b0_inv = inverse_rat(b0);

  const int n = static_cast<int>(vb.size());
  std::vector<int> tup(d);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == d) {
      IntMat u(d, LatVec(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Rat e = 0;
          for (int k = 0; k < d; ++k) e += Rat(vb[tup[k]][i]) * b0_inv[k][j];
          if (e.get_den() != 1) return false;
          u[i][j] = e.get_num();
        }
      Int det = det_n(u);
      if (det != 1 && det != -1) return false;
      UnimodularMap um(std::move(u));
      std::vector<LatVec> image;
      for (const auto& v : va) image.push_back(apply_map(um, v));
      return sorted_lattice_set(std::move(image)) == vb_sorted;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tup[depth] = i;
      bool hit = rec(depth + 1);
      used[i] = false;
      if (hit) return true;
    }
    return false;
  };
  return rec(0);
}

inline FanoPolytope fano_from(const std::vector<std::vector<long>>& pts) {
  std::vector<LatVec> v;
  for (const auto& p : pts) {
    LatVec lv;
    for (long c : p) lv.emplace_back(c);
    v.push_back(std::move(lv));
  }
  return std::get<FanoPolytope>(validate_fano(v));
}

inline std::vector<LatVec> lat_points(const std::vector<std::vector<long>>& pts) {
  std::vector<LatVec> v;
  for (const auto& p : pts) {
    LatVec lv;
    for (long c : p) lv.emplace_back(c);
    v.push_back(std::move(lv));
  }
  return v;
}

// d-cube conv{(+-1,...,+-1)}
inline FanoPolytope fano_cube(int d) {
  std::vector<LatVec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    LatVec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i & 1) ? 1 : -1;
    pts.push_back(std::move(v));
  }
  return std::get<FanoPolytope>(validate_fano(pts));
}

}  // namespace fanob::testutil
