#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fanob/io.hpp"
#include "helpers.hpp"

using namespace fanob;
using namespace fanob::testutil;

TEST_CASE("parse plain") {
  auto recs = parse("(2,-1);(0,1);(-1,0)\n", Format::Plain);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].vertices == lat_points({{2, -1}, {0, 1}, {-1, 0}}));
  CHECK(recs[0].id == "line1");

  auto multi = parse("# comment\n(1,0);(0,1);(-1,-1)\n\n(1,1);(-1,1);(-1,-1);(1,-1)\n",
                     Format::Plain);
  CHECK(multi.size() == 2);
  CHECK(multi[1].id == "line4");

  CHECK_THROWS_AS(parse("(1,0);(0,1,2)\n", Format::Plain), ParseError);
  CHECK_THROWS_AS(parse("1,0);(0,1)\n", Format::Plain), ParseError);
  try {
    parse("(1,0);(0,1)\n(bad)\n", Format::Plain);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK(parse("", Format::Plain).empty());
}

TEST_CASE("parse json") {
  auto recs = parse(R"([{"id":"P2","vertices":[[-5,-4],[-5,8],[5,1],[8,-5]]}])",
                    Format::Json);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].id == "P2");
  CHECK(recs[0].vertices == lat_points({{-5, -4}, {-5, 8}, {5, 1}, {8, -5}}));
  CHECK_THROWS_AS(parse("{}", Format::Json), ParseError);
  CHECK_THROWS_AS(parse("[{\"id\":\"x\"}]", Format::Json), ParseError);
}

TEST_CASE("parse grdb-matrix, both layouts") {
  auto recs = parse("2 4\n1 -1 -1 1\n1 1 -1 -1\n", Format::GrdbMatrix);
  REQUIRE(recs.size() == 1);
  CHECK(sorted_lattice_set(recs[0].vertices) ==
        sorted_lattice_set(lat_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})));
  auto recs_t = parse("2 4\n1 1\n-1 1\n-1 -1\n1 -1\n", Format::GrdbMatrix, true);
  CHECK(sorted_lattice_set(recs_t[0].vertices) ==
        sorted_lattice_set(recs[0].vertices));
  CHECK_THROWS_AS(parse("2 4\n1 2 3\n", Format::GrdbMatrix), ParseError);
}

TEST_CASE("parse after serialize is the identity") {
  std::vector<PolytopeRecord> recs;
  PolytopeRecord a{"a", lat_points({{2, -1}, {0, 1}, {-1, 0}}), {}};
  PolytopeRecord b{"b", lat_points({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), {}};
  recs.push_back(a);
  recs.push_back(b);
  for (Format f : {Format::Plain, Format::Json, Format::GrdbMatrix}) {
    auto back = parse(serialize(recs, f), f);
    REQUIRE(back.size() == recs.size());
    for (size_t i = 0; i < recs.size(); ++i)
      CHECK(back[i].vertices == recs[i].vertices);
  }
}

TEST_CASE("enumerator finds the reflexive simplex class") {
  auto recs = enumerate_fano_polygons(2, 3, 1);
  FanoPolytope p2 = fano_from({{1, 0}, {0, 1}, {-1, -1}});
  CanonicalKey want = canonical_key(p2);
  bool found = false;
  for (const auto& r : recs) {
    FanoResult fr = validate_fano(r.vertices);
    REQUIRE(std::holds_alternative<FanoPolytope>(fr));
    if (canonical_key(std::get<FanoPolytope>(fr)) == want) found = true;
  }
  CHECK(found);
}

TEST_CASE("enumerator output is closed under the box symmetries") {
  auto recs = enumerate_fano_polygons(2, 4, 1);
  std::set<std::vector<LatVec>> sets;
  for (const auto& r : recs) sets.insert(sorted_lattice_set(r.vertices));
  // the 8 signed-permutation symmetries of the square box
  std::vector<IntMat> sym;
  for (int swap = 0; swap < 2; ++swap)
    for (int sx : {1, -1})
      for (int sy : {1, -1}) {
        IntMat m(2, LatVec(2, 0));
        m[0][swap] = sx;
        m[1][1 - swap] = sy;
        sym.push_back(m);
      }
  for (const auto& s : sets)
    for (const auto& m : sym) {
      UnimodularMap u{m};
      std::vector<LatVec> image;
      for (const auto& v : s) image.push_back(apply_map(u, v));
      CHECK(sets.count(sorted_lattice_set(image)) == 1);
    }
}

TEST_CASE("enumerator respects the index filter") {
  auto all = enumerate_fano_polygons(2, 4);
  auto only1 = enumerate_fano_polygons(2, 4, 1);
  CHECK(only1.size() < all.size());
  for (const auto& r : only1) {
    FanoPolytope p = std::get<FanoPolytope>(validate_fano(r.vertices));
    CHECK(gorenstein_index(p) == 1);
  }
}

TEST_CASE("results store round-trip, filters and version gating") {
  std::string path = "test_store.jsonl";
  std::remove(path.c_str());
  ResultsStore store(path);
  FanoPolytope p = fano_from({{1, 0}, {0, 1}, {-1, -1}});
  ResultRecord rec = analyze_record("p2", p);
  store.append(rec);
  CHECK(store.contains(rec.canonical_key));

  ResultsStore::Query q;
  q.canonical_key = rec.canonical_key;
  auto got = store.query(q);
  REQUIRE(got.size() == 1);
  CHECK(got[0].id == rec.id);
  CHECK(got[0].gorenstein_index == rec.gorenstein_index);
  CHECK(got[0].verdict == rec.verdict);

  ResultsStore::Query qdim;
  qdim.dimension = 3;
  CHECK(store.query(qdim).empty());
  ResultsStore::Query qv;
  qv.verdict_kind = "PeriodicBInfinity";
  CHECK(store.query(qv).size() == 1);

  // a stale engine version is recomputed, never reused
  ResultRecord old = rec;
  old.engine_version = "0.0.0";
  old.canonical_key = "stale";
  store.append(old);
  CHECK_FALSE(store.contains("stale"));

  std::remove(path.c_str());
  CHECK_THROWS_AS(ResultsStore("/nonexistent-dir/x.jsonl").append(rec),
                  std::runtime_error);
}

TEST_CASE("svg rendering emits one polygon per trajectory step") {
  auto [v, traj] = classify(fano_from({{-25, -12}, {-5, -6}, {25, 14}}));
  std::string doc = render_trajectory_svg(traj);
  size_t count = 0, pos = 0;
  while ((pos = doc.find("<polygon", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == traj.entries.size());
  CHECK(doc.find("<svg") == 0);
}

namespace {

int run_argv(std::initializer_list<const char*> args, std::string* out = nullptr) {
  std::vector<const char*> argv{"fanob"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream capture;
  auto* old = std::cout.rdbuf(capture.rdbuf());
  int rc = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  if (out) *out = capture.str();
  return rc;
}

}  // namespace

TEST_CASE("cli exit codes and determinism") {
  std::string out1, out2;
  CHECK(run_argv({"analyze", "(1,0);(0,1);(-1,-1)"}, &out1) == 0);
  CHECK(run_argv({"analyze", "(1,0);(0,1);(-1,-1)"}, &out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1.find("gorenstein_index: 1") != std::string::npos);

  CHECK(run_argv({"analyze", "(1,0);(-1,1);(1,-1)"}) == 1);  // not Fano
  CHECK(run_argv({"analyze", "(not a polytope"}) == 1);
  CHECK(run_argv({"--bogus-flag"}) == 1);
  CHECK(run_argv({"classify", "(1,0);(0,1);(-1,-1)", "--budget", "4"}) == 0);

  std::string t;
  CHECK(run_argv({"transform", "(-25,-12);(-5,-6);(25,14)"}, &t) == 0);
  CHECK(t == "(-5,-3);(5,2);(0,1)\n");
}
