#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanob/classify.hpp"

namespace fanob {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kStoreEnvVar = "FANOB_STORE";

struct PolytopeRecord {
  std::string id;
  std::vector<LatVec> vertices;
  std::map<std::string, std::string> tags;
};

enum class Format { Plain, Json, GrdbMatrix };

Format parse_format_name(const std::string& name);  // throws on unknown

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// plain: one polytope per line, `(x1,y1,...);(x2,y2,...)`.
// json: array of {"id":..., "vertices":[[...],...]}.
// grdb-matrix: repeated blocks `d n` then d rows of n integers with
// columns as vertices (rows as vertices when transpose is set).
std::vector<PolytopeRecord> parse(const std::string& text, Format format,
                                  bool transpose = false);
std::string serialize(const std::vector<PolytopeRecord>& records,
                      Format format, bool transpose = false);

// Every subset of the primitive points of [-B,B]^2 that forms a convex
// polygon with all chosen points as vertices and the origin strictly
// interior. Emits one record per vertex SET; unimodular duplicates are
// intentional and deduplicated downstream.
std::vector<PolytopeRecord> enumerate_fano_polygons(
    long box, int max_vertices, std::optional<long> index_filter = {});

struct ResultRecord {
  std::string id;
  CanonicalKey canonical_key;
  int dimension = 0;
  int vertex_count = 0;
  Int gorenstein_index = 0;
  bool smooth = false;
  bool symmetric = false;
  bool kahler_einstein = false;
  std::string verdict;
  std::string trajectory_summary;
  std::string engine_version = kEngineVersion;
};

ResultRecord analyze_record(const std::string& id, const FanoPolytope& p,
                            const ClassifyOptions& opt = {});

// Append-only line store of ResultRecords, one structured-text record
// per line, keyed by canonical_key. Records from other engine versions
// are ignored by queries.
class ResultsStore {
 public:
  explicit ResultsStore(std::string path);

  void append(const ResultRecord& r);  // throws std::runtime_error on I/O error
  bool contains(const CanonicalKey& key) const;

  struct Query {
    std::optional<CanonicalKey> canonical_key;
    std::optional<int> dimension;
    std::optional<Int> gorenstein_index;
    std::optional<std::string> verdict_kind;  // prefix match on verdict
  };
  std::vector<ResultRecord> query(const Query& q) const;

 private:
  std::string path_;
};

// 2D trajectory strip as a standalone SVG document.
std::string render_trajectory_svg(const Trajectory& traj);

// Subcommands: analyze, transform, classify, orbit, census, enumerate,
// svg. Returns 0 on success, 1 on input error, 2 on resource abort.
int run_cli(int argc, const char* const* argv);

}  // namespace fanob
