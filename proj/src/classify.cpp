#include "fanob/classify.hpp"

#include <algorithm>
#include <sstream>

namespace fanob {

namespace {

// vertex-facet pairing values <normal_f, vertex_v>
IntMat pairing_matrix(const FanoPolytope& p) {
  auto verts = p.vertices();
  auto fs = facets(p.poly).facets;
  IntMat m(fs.size(), LatVec(verts.size()));
  for (size_t f = 0; f < fs.size(); ++f)
    for (size_t v = 0; v < verts.size(); ++v) {
      Int s = 0;
      for (size_t c = 0; c < verts[v].size(); ++c)
        s += fs[f].half_space.normal[c] * verts[v][c];
      m[f][v] = s;
    }
  return m;
}

std::string serialize_mat(const IntMat& m) {
  std::ostringstream os;
  os << m.size() << 'x' << (m.empty() ? 0 : m[0].size()) << ':';
  for (const auto& row : m) {
    for (const auto& e : row) os << e << ',';
    os << ';';
  }
  return os.str();
}

struct KeySearch {
  const IntMat& pairing;   // facets x vertices
  const IntMat& vert_cols; // d x n vertex matrix
  int m, n;
  std::optional<IntMat> best_hnf;

  KeySearch(const IntMat& pm, const IntMat& vc)
      : pairing(pm), vert_cols(vc),
        m(static_cast<int>(pm.size())),
        n(static_cast<int>(pm[0].size())) {}

  // groups: ordered partition of column indices still tied
  void rec(std::vector<bool>& used_row, std::vector<std::vector<int>>& groups,
           int depth) {
    if (depth == m) {
      // distinct vertices have distinct pairing columns, so all groups
      // are singletons here
      std::vector<int> order;
      for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());
      IntMat mat(vert_cols.size(), LatVec(order.size()));
      for (size_t r = 0; r < vert_cols.size(); ++r)
        for (size_t c = 0; c < order.size(); ++c)
          mat[r][c] = vert_cols[r][order[c]];
      IntMat h = hermite_form(std::move(mat));
      if (!best_hnf || h < *best_hnf) best_hnf = std::move(h);
      return;
    }
    // lexicographically maximal next row over the remaining rows, with
    // columns sorted descending inside each tie group
    std::optional<LatVec> best_tuple;
    std::vector<int> best_rows;
    for (int r = 0; r < m; ++r) {
      if (used_row[r]) continue;
      LatVec tuple;
      tuple.reserve(n);
      for (const auto& g : groups) {
        std::vector<Int> vals;
        for (int c : g) vals.push_back(pairing[r][c]);
        std::sort(vals.rbegin(), vals.rend());
        tuple.insert(tuple.end(), vals.begin(), vals.end());
      }
      if (!best_tuple || tuple > *best_tuple) {
        best_tuple = std::move(tuple);
        best_rows = {r};
      } else if (tuple == *best_tuple) {
        best_rows.push_back(r);
      }
    }
    for (int r : best_rows) {
      std::vector<std::vector<int>> refined;
      for (const auto& g : groups) {
        std::vector<int> sorted = g;
        std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
          return pairing[r][a] > pairing[r][b];
        });
        size_t i = 0;
        while (i < sorted.size()) {
          size_t j = i;
          while (j < sorted.size() &&
                 pairing[r][sorted[j]] == pairing[r][sorted[i]])
            ++j;
          refined.emplace_back(sorted.begin() + i, sorted.begin() + j);
          i = j;
        }
      }
      used_row[r] = true;
      rec(used_row, refined, depth + 1);
      used_row[r] = false;
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const FanoPolytope& p) {
  auto verts = p.vertices();
  const int d = p.dim;
  const int n = static_cast<int>(verts.size());
  IntMat cols(d, LatVec(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < d; ++r) cols[r][c] = verts[c][r];
  IntMat pm = pairing_matrix(p);
  KeySearch ks(pm, cols);
  std::vector<bool> used(ks.m, false);
  std::vector<std::vector<int>> groups(1);
  for (int c = 0; c < n; ++c) groups[0].push_back(c);
  ks.rec(used, groups, 0);
  return serialize_mat(*ks.best_hnf);
}

std::string TypeVerdict::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case VerdictKind::StrictType:
      os << "StrictType{k=" << k << ",reason=" << fano_failure_name(reason)
         << "}";
      break;
    case VerdictKind::PeriodicBInfinity:
      os << "PeriodicBInfinity{t=" << t << ",period=" << period << "}";
      break;
    case VerdictKind::Unresolved:
      os << "Unresolved{budget=" << budget
         << (resource_abort ? ",resource_abort" : "") << "}";
      break;
  }
  return os.str();
}

namespace {

TrajectoryEntry make_entry(int step, FanoPolytope p, bool flags) {
  TrajectoryEntry e;
  e.step = step;
  e.key = canonical_key(p);
  e.vertex_count = static_cast<int>(p.poly.vertices.size());
  e.kahler_einstein = flags && is_kahler_einstein(p);
  e.symmetric = flags && is_symmetric(p);
  e.smooth = flags && is_smooth(p);
  e.polytope = std::move(p);
  return e;
}

}  // namespace

std::pair<TypeVerdict, Trajectory> classify(const FanoPolytope& p,
                                            const ClassifyOptions& opt) {
  Trajectory traj;
  std::map<CanonicalKey, int> seen;
  traj.entries.push_back(make_entry(0, p, opt.flags));
  seen[traj.entries[0].key] = 0;
  FanoPolytope cur = p;
  for (int step = 1; step <= opt.budget; ++step) {
    if (static_cast<long>(facets(cur.poly).facets.size()) >
        opt.max_hull_vertices) {
      TypeVerdict v{VerdictKind::Unresolved};
      v.budget = step - 1;
      v.resource_abort = true;
      return {v, traj};
    }
    FanoResult r = b_transform_fano(cur);
    if (auto* fail = std::get_if<FanoFailure>(&r)) {
      TypeVerdict v{VerdictKind::StrictType};
      v.k = step - 1;
      v.reason = *fail;
      return {v, traj};
    }
    cur = std::get<FanoPolytope>(std::move(r));
    traj.entries.push_back(make_entry(step, cur, opt.flags));
    auto it = seen.find(traj.entries.back().key);
    if (it != seen.end()) {
      TypeVerdict v{VerdictKind::PeriodicBInfinity};
      v.t = it->second;
      v.period = step - it->second;
      return {v, traj};
    }
    seen[traj.entries.back().key] = step;
  }
  TypeVerdict v{VerdictKind::Unresolved};
  v.budget = opt.budget;
  return {v, traj};
}

std::vector<std::vector<LatVec>> raw_extension(const std::vector<LatVec>& cycle,
                                               int steps) {
  std::vector<std::vector<LatVec>> out;
  std::vector<LatVec> cur = cycle;
  for (int s = 0; s < steps; ++s) {
    const size_t k = cur.size();
    if (k < 2) break;
    std::vector<LatVec> next;
    bool degenerate = false;
    for (size_t i = 0; i < k; ++i) {
      LatVec sum = add(cur[i], cur[(i + 1) % k]);
      if (is_zero(sum)) {
        degenerate = true;  // opposite pair: the formula gives no direction
        break;
      }
      next.push_back(primitivize(sum));
    }
    if (degenerate) break;
    out.push_back(next);
    cur = std::move(next);
  }
  return out;
}

OrbitResult orbit_classes(const FanoPolytope& p, int budget,
                          bool include_start) {
  ClassifyOptions opt;
  opt.budget = budget;
  opt.flags = false;
  auto [verdict, traj] = classify(p, opt);
  OrbitResult out;
  out.complete = verdict.kind == VerdictKind::PeriodicBInfinity;
  for (const auto& e : traj.entries) {
    if (e.step == 0 && !include_start) continue;
    out.classes.insert(e.key);
  }
  return out;
}

bool is_pseudo_periodic(const FanoPolytope& p, int budget, int window) {
  if (window < 2 || budget <= window)
    throw std::invalid_argument("is_pseudo_periodic: need budget > window >= 2");
  ClassifyOptions opt;
  opt.budget = budget;
  opt.flags = false;
  auto [verdict, traj] = classify(p, opt);
  std::vector<int> counts;
  for (const auto& e : traj.entries) counts.push_back(e.vertex_count);
  if (verdict.kind == VerdictKind::PeriodicBInfinity) {
    // unroll the detected cycle so the window test sees the whole budget
    while (static_cast<int>(counts.size()) <= budget) {
      int idx = verdict.t +
                (static_cast<int>(counts.size()) - verdict.t) % verdict.period;
      counts.push_back(counts[idx]);
    }
  }
  for (int k = 0; k + window < static_cast<int>(counts.size()) && k <= budget - window; ++k) {
    bool constant = true;
    for (int j = 1; j <= window; ++j)
      if (counts[k + j] != counts[k]) constant = false;
    if (constant) return true;
  }
  return false;
}

CensusResult census(const std::vector<std::vector<LatVec>>& inputs,
                    const CensusOptions& opt) {
  CensusResult out;
  std::set<CanonicalKey> seen;
  std::map<std::pair<int, Int>, CensusRow> rows;
  for (const auto& pts : inputs) {
    FanoResult r = validate_fano(pts);
    if (std::holds_alternative<FanoFailure>(r)) {
      ++out.malformed;
      continue;
    }
    FanoPolytope p = std::get<FanoPolytope>(std::move(r));
    if (opt.dedup) {
      CanonicalKey key = canonical_key(p);
      if (!seen.insert(key).second) {
        ++out.duplicates;
        continue;
      }
    }
    if (opt.smooth_only && !is_smooth(p)) continue;
    ClassifyOptions copt;
    copt.budget = opt.budget;
    copt.flags = false;
    auto [verdict, traj] = classify(p, copt);
    auto key = std::make_pair(p.dim, gorenstein_index(p));
    CensusRow& row = rows.try_emplace(key, CensusRow{key.first, key.second})
                         .first->second;
    ++row.total;
    if (is_kahler_einstein(p)) ++row.kahler_einstein;
    switch (verdict.kind) {
      case VerdictKind::StrictType: ++row.strict_counts[verdict.k]; break;
      case VerdictKind::PeriodicBInfinity: ++row.periodic; break;
      case VerdictKind::Unresolved: ++row.unresolved; break;
    }
  }
  for (auto& [k, row] : rows) out.rows.push_back(std::move(row));
  return out;
}

}  // namespace fanob
