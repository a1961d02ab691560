#include <doctest.h>

#include "helpers.hpp"

using namespace fanob;
using namespace fanob::testutil;

namespace {

std::vector<RatVec> rat_points(const std::vector<std::vector<long>>& pts) {
  std::vector<RatVec> out;
  for (const auto& p : pts) {
    RatVec v;
    for (long c : p) v.emplace_back(c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVec> sorted_verts(const VPolytope& p) {
  auto v = p.vertices;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("hull reduces interior points and detects dimension drop") {
  VPolytope seg = hull(rat_points({{1, -1}, {-1, -1}, {0, -1}}));
  CHECK(seg.affine_dim == 1);
  CHECK(sorted_verts(seg) == rat_points({{-1, -1}, {1, -1}}));

  VPolytope tri = hull(rat_points({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(tri.affine_dim == 2);
  CHECK(tri.vertices.size() == 3);

  VPolytope point = hull(rat_points({{2, 3}, {2, 3}}));
  CHECK(point.affine_dim == 0);
  CHECK(point.vertices.size() == 1);

  CHECK_THROWS_AS(hull({}), std::invalid_argument);
  CHECK_THROWS_AS(hull(rat_points({{1, 0}, {1, 0, 0}})), DimensionMismatch);
}

TEST_CASE("2D hull order is counterclockwise from the lexicographic minimum") {
  VPolytope sq = hull(rat_points({{1, 1}, {-1, 1}, {0, 0}, {1, -1}, {-1, -1}}));
  CHECK(sq.vertices ==
        rat_points({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
}

TEST_CASE("hull is idempotent") {
  Rng rng(23);
  std::uniform_int_distribution<long> coord(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RatVec> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({Rat(coord(rng)), Rat(coord(rng))});
    VPolytope h = hull(pts);
    VPolytope h2 = hull(h.vertices);
    CHECK(h2.vertices == h.vertices);
    CHECK(h2.affine_dim == h.affine_dim);
  }
}

TEST_CASE("facets of the square and the d-cubes") {
  VPolytope sq = hull(rat_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  auto fs = facets(sq).facets;
  CHECK(fs.size() == 4);
  std::vector<LatVec> normals;
  for (const auto& f : fs) {
    CHECK(f.half_space.offset == 1);
    normals.push_back(f.half_space.normal);
  }
  std::sort(normals.begin(), normals.end());
  CHECK(normals == std::vector<LatVec>{{Int(-1), Int(0)},
                                       {Int(0), Int(-1)},
                                       {Int(0), Int(1)},
                                       {Int(1), Int(0)}});

  for (int d = 3; d <= 4; ++d) {
    auto cube = fano_cube(d);
    auto cf = facets(cube.poly).facets;
    CHECK(static_cast<int>(cf.size()) == 2 * d);
    for (const auto& f : cf)
      CHECK(static_cast<int>(f.vertex_ids.size()) == 1 << (d - 1));
  }

  VPolytope tri = hull(rat_points({{1, -2}, {0, 1}, {-1, 1}}));
  CHECK(facets(tri).facets.size() == 3);
  CHECK_THROWS_AS(facets(hull(rat_points({{0, 0}, {1, 1}}))),
                  std::invalid_argument);
}

TEST_CASE("origin interiority, both paths") {
  CHECK_FALSE(contains_origin_interior(hull(rat_points({{1, 0}, {-1, 1}, {1, -1}}))));
  CHECK(contains_origin_interior(hull(rat_points({{1, 0}, {0, 1}, {-1, -1}}))));
  CHECK(contains_origin_interior(hull(rat_points({{3, -1}, {-1, -1}, {-2, 1}}))));
  CHECK_FALSE(contains_origin_interior(hull(rat_points({{1, -1}, {-1, -1}}))));

  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<long> coord(-10, 10);
    std::vector<RatVec> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({Rat(coord(rng)), Rat(coord(rng))});
    VPolytope h = hull(pts);
    if (h.affine_dim != 2) continue;
    CHECK(contains_origin_interior(h) == origin_interior_order2(h));
  }
}

TEST_CASE("dual closed form, cross-polytope and involution") {
  // conv{(a,-b),(0,1),(-c,d)} with (a,b,c,d)=(1,2,1,1)
  VPolytope d1 = dual(hull(rat_points({{1, -2}, {0, 1}, {-1, 1}})));
  CHECK(sorted_verts(d1) == rat_points({{-3, -1}, {0, -1}, {3, 2}}));

  VPolytope cross = hull(rat_points({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  CHECK(sorted_verts(dual(cross)) ==
        rat_points({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));

  CHECK_THROWS_AS(dual(hull(rat_points({{1, 0}, {-1, 1}, {1, -1}}))),
                  std::invalid_argument);

  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    FanoPolytope p = random_fano_polygon(rng, 9);
    VPolytope dd = dual(dual(p.poly));
    CHECK(sorted_verts(dd) == sorted_verts(p.poly));
  }
}

TEST_CASE("volume and centroid") {
  VPolytope sq = hull(rat_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  CHECK(volume(sq) == Rat(4));
  CHECK(centroid(sq) == RatVec{Rat(0), Rat(0)});

  VPolytope simplex = hull(rat_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(volume(simplex) == Rat(1, 6));

  auto cube3 = fano_cube(3);
  CHECK(volume(cube3.poly) == Rat(8));
  CHECK(centroid(cube3.poly) == RatVec{Rat(0), Rat(0), Rat(0)});

  // shifted polytope: apex falls back to the first vertex
  VPolytope shifted = hull(rat_points({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
  CHECK(volume(shifted) == Rat(4));
  CHECK(centroid(shifted) == RatVec{Rat(2), Rat(2)});

  CHECK_THROWS_AS(volume(hull(rat_points({{0, 0}, {1, 1}}))),
                  std::invalid_argument);
}

TEST_CASE("centroid is invariant under input permutation") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    FanoPolytope p = random_fano_polygon(rng, 12);
    std::vector<RatVec> pts = p.poly.vertices;
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(centroid(hull(pts)) == centroid(p.poly));
    CHECK(volume(hull(pts)) == volume(p.poly));
  }
}

TEST_CASE("volume and centroid transform correctly under unimodular maps") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    FanoPolytope p = random_fano_polygon(rng, 10);
    UnimodularMap u = random_unimodular2(rng);
    FanoPolytope q = apply_to_fano(u, p);
    CHECK(volume(q.poly) == volume(p.poly));
    CHECK(centroid(q.poly) == apply_map_rat(u, centroid(p.poly)));
    CHECK(contains_origin_interior(q.poly));
  }
}
