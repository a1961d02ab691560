#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanob/fano.hpp"

namespace fanob {

// Total invariant for unimodular equivalence: equal keys iff the vertex
// sets are related by a map in GL_d(Z). Computed by maximizing the
// vertex-facet pairing matrix over row and column permutations, then
// taking the minimal Hermite form of the vertex matrix over the column
// orders realizing that maximum.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const FanoPolytope& p);

enum class VerdictKind { StrictType, PeriodicBInfinity, Unresolved };

struct TypeVerdict {
  VerdictKind kind;
  // StrictType: B^k Fano, B^{k+1} not, with the failure reason.
  int k = 0;
  FanoFailure reason = FanoFailure::DimensionDrop;
  // PeriodicBInfinity: key(step t+period) = key(step t), minimal.
  int t = 0;
  int period = 0;
  // Unresolved: budget exhausted, or the hull-size guard tripped.
  int budget = 0;
  bool resource_abort = false;

  std::string to_string() const;
};

struct TrajectoryEntry {
  int step;
  FanoPolytope polytope;
  CanonicalKey key;
  int vertex_count;
  bool kahler_einstein;
  bool symmetric;
  bool smooth;
};

struct Trajectory {
  std::vector<TrajectoryEntry> entries;  // entry 0 is the input
};

struct ClassifyOptions {
  int budget = 64;
  long max_hull_vertices = 1000000;
  bool flags = true;  // fill the KE/symmetric/smooth fields
};

std::pair<TypeVerdict, Trajectory> classify(const FanoPolytope& p,
                                            const ClassifyOptions& opt = {});

// Continue the 2D consecutive-sum formula past a Fano failure, keeping
// the raw primitivized point lists (no hull, no validation). Starts
// from a ccw vertex cycle; each step feeds the previous list back in.
std::vector<std::vector<LatVec>> raw_extension(const std::vector<LatVec>& cycle,
                                               int steps);

struct OrbitResult {
  std::set<CanonicalKey> classes;
  bool complete;  // false when the trajectory did not close within budget
};

OrbitResult orbit_classes(const FanoPolytope& p, int budget,
                          bool include_start);

// Heuristic: vertex count constant for `window` consecutive steps.
bool is_pseudo_periodic(const FanoPolytope& p, int budget, int window);

struct CensusRow {
  int dimension;
  Int index;
  std::map<int, long> strict_counts;  // k -> count
  long periodic = 0;
  long unresolved = 0;
  long total = 0;
  long kahler_einstein = 0;
};

struct CensusOptions {
  int budget = 64;
  bool dedup = true;        // by canonical key, before counting
  bool smooth_only = false;
};

struct CensusResult {
  std::vector<CensusRow> rows;  // ordered by (dimension, index)
  long malformed = 0;           // inputs that failed Fano validation
  long duplicates = 0;
};

CensusResult census(const std::vector<std::vector<LatVec>>& inputs,
                    const CensusOptions& opt = {});

}  // namespace fanob
