#include "fanob/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace fanob {

using nlohmann::json;

Format parse_format_name(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "json") return Format::Json;
  if (name == "grdb-matrix") return Format::GrdbMatrix;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

LatVec parse_tuple(const std::string& s, int line) {
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i == s.size() || s[i] != '(') throw ParseError(line, "expected '('");
  ++i;
  LatVec out;
  std::string num;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == ',' || c == ')') {
      if (num.empty()) throw ParseError(line, "empty coordinate");
      try {
        out.emplace_back(num);
      } catch (const std::invalid_argument&) {
        throw ParseError(line, "bad integer: " + num);
      }
      num.clear();
      if (c == ')') {
        ++i;
        break;
      }
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      num += c;
    }
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) throw ParseError(line, "trailing characters after ')'");
  if (out.empty()) throw ParseError(line, "empty tuple");
  return out;
}

std::vector<PolytopeRecord> parse_plain(const std::string& text) {
  std::vector<PolytopeRecord> out;
  std::istringstream is(text);
  std::string ln;
  int lineno = 0;
  while (std::getline(is, ln)) {
    ++lineno;
    std::string trimmed = ln;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    PolytopeRecord rec;
    rec.id = "line" + std::to_string(lineno);
    size_t start = 0;
    while (start <= trimmed.size()) {
      size_t semi = trimmed.find(';', start);
      std::string part = trimmed.substr(
          start, semi == std::string::npos ? std::string::npos : semi - start);
      rec.vertices.push_back(parse_tuple(part, lineno));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    for (const auto& v : rec.vertices)
      if (v.size() != rec.vertices[0].size())
        throw ParseError(lineno, "mixed vertex dimensions");
    out.push_back(std::move(rec));
  }
  return out;
}

Int json_to_int(const json& j, int line) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(line, "coordinate must be an integer");
}

std::vector<PolytopeRecord> parse_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid json: ") + e.what());
  }
  if (!root.is_array()) throw ParseError(1, "top level must be an array");
  std::vector<PolytopeRecord> out;
  int k = 0;
  for (const auto& item : root) {
    ++k;
    if (!item.is_object() || !item.contains("vertices"))
      throw ParseError(k, "entry must be an object with \"vertices\"");
    PolytopeRecord rec;
    rec.id = item.contains("id") ? item["id"].get<std::string>()
                                 : "json" + std::to_string(k);
    for (const auto& v : item["vertices"]) {
      LatVec lv;
      for (const auto& c : v) lv.push_back(json_to_int(c, k));
      rec.vertices.push_back(std::move(lv));
    }
    if (item.contains("tags"))
      for (auto& [key, val] : item["tags"].items())
        rec.tags[key] = val.get<std::string>();
    if (rec.vertices.empty()) throw ParseError(k, "no vertices");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PolytopeRecord> parse_grdb(const std::string& text, bool transpose) {
  std::istringstream is(text);
  std::vector<PolytopeRecord> out;
  long d, n;
  int block = 0;
  while (is >> d) {
    ++block;
    if (!(is >> n) || d < 1 || n < 1)
      throw ParseError(block, "expected `dim count` header");
    // rows are coordinates, columns are vertices (swapped when transposed)
    long rows = transpose ? n : d;
    long cols = transpose ? d : n;
    IntMat m(rows, LatVec(cols));
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c) {
        std::string tok;
        if (!(is >> tok)) throw ParseError(block, "truncated matrix block");
        try {
          m[r][c] = Int(tok);
        } catch (const std::invalid_argument&) {
          throw ParseError(block, "bad integer: " + tok);
        }
      }
    PolytopeRecord rec;
    rec.id = "grdb" + std::to_string(block);
    rec.tags["source"] = "grdb";
    for (long v = 0; v < n; ++v) {
      LatVec lv(d);
      for (long c = 0; c < d; ++c) lv[c] = transpose ? m[v][c] : m[c][v];
      rec.vertices.push_back(std::move(lv));
    }
    out.push_back(std::move(rec));
  }
  if (!is.eof()) throw ParseError(block + 1, "unexpected token");
  return out;
}

}  // namespace

std::vector<PolytopeRecord> parse(const std::string& text, Format format,
                                  bool transpose) {
  switch (format) {
    case Format::Plain: return parse_plain(text);
    case Format::Json: return parse_json(text);
    case Format::GrdbMatrix: return parse_grdb(text, transpose);
  }
  throw std::invalid_argument("unreachable format");
}

std::string serialize(const std::vector<PolytopeRecord>& records,
                      Format format, bool transpose) {
  std::ostringstream os;
  if (format == Format::Plain) {
    for (const auto& r : records) {
      for (size_t i = 0; i < r.vertices.size(); ++i) {
        if (i) os << ';';
        os << vec_to_string(r.vertices[i]);
      }
      os << '\n';
    }
    return os.str();
  }
  if (format == Format::Json) {
    json root = json::array();
    for (const auto& r : records) {
      json item;
      item["id"] = r.id;
      json verts = json::array();
      for (const auto& v : r.vertices) {
        json jv = json::array();
        for (const auto& c : v) {
          if (c.fits_slong_p()) jv.push_back(c.get_si());
          else jv.push_back(c.get_str());
        }
        verts.push_back(jv);
      }
      item["vertices"] = verts;
      if (!r.tags.empty()) item["tags"] = r.tags;
      root.push_back(item);
    }
    return root.dump(2) + "\n";
  }
  // grdb-matrix
  for (const auto& r : records) {
    long d = static_cast<long>(r.vertices.at(0).size());
    long n = static_cast<long>(r.vertices.size());
    os << d << ' ' << n << '\n';
    long rows = transpose ? n : d;
    long cols = transpose ? d : n;
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < cols; ++j) {
        if (j) os << ' ';
        os << (transpose ? r.vertices[i][j] : r.vertices[j][i]);
      }
      os << '\n';
    }
  }
  return os.str();
}

namespace {

struct Pt {
  long x, y;
};

long lcross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

// half-plane split then cross-product comparison: ccw from (1,0)
bool angle_less(const Pt& a, const Pt& b) {
  int ha = (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1;
  int hb = (b.y > 0 || (b.y == 0 && b.x > 0)) ? 0 : 1;
  if (ha != hb) return ha < hb;
  return lcross(a, b) > 0;
}

// lattice-height of the edge facet: ord(p,q) / content(q-p)
long edge_local_index(const Pt& p, const Pt& q) {
  long c = lcross(p, q);
  long g = std::gcd(std::abs(q.x - p.x), std::abs(q.y - p.y));
  return c / g;
}

}  // namespace

std::vector<PolytopeRecord> enumerate_fano_polygons(
    long box, int max_vertices, std::optional<long> index_filter) {
  if (box < 1 || max_vertices < 3)
    throw std::invalid_argument("enumerate: need box >= 1, max_vertices >= 3");
  std::vector<Pt> pts;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      if (std::gcd(std::abs(x), std::abs(y)) == 1) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end(), angle_less);
  const int n = static_cast<int>(pts.size());

  std::vector<PolytopeRecord> out;
  std::vector<int> chain;
  auto local_ok = [&](const Pt& p, const Pt& q) {
    return !index_filter || index_filter.value() % edge_local_index(p, q) == 0;
  };
  auto emit = [&](const std::vector<int>& ch) {
    const Pt& last = pts[ch.back()];
    const Pt& first = pts[ch.front()];
    const Pt& second = pts[ch[1]];
    const Pt& penult = pts[ch[ch.size() - 2]];
    if (lcross(last, first) <= 0) return;
    if (!local_ok(last, first)) return;
    // strict convexity at the closing corners
    Pt e1{first.x - last.x, first.y - last.y};
    Pt e0{last.x - penult.x, last.y - penult.y};
    Pt e2{second.x - first.x, second.y - first.y};
    if (lcross(e0, e1) <= 0 || lcross(e1, e2) <= 0) return;
    if (index_filter) {
      long l = 1;
      for (size_t i = 0; i < ch.size(); ++i)
        l = std::lcm(l, edge_local_index(pts[ch[i]], pts[ch[(i + 1) % ch.size()]]));
      if (l != index_filter.value()) return;
    }
    PolytopeRecord rec;
    rec.id = "enum" + std::to_string(out.size() + 1);
    rec.tags["source"] = "enumerator";
    for (int i : ch) rec.vertices.push_back({Int(pts[i].x), Int(pts[i].y)});
    out.push_back(std::move(rec));
  };
  // chains in strictly increasing angular order; the start vertex is
  // the angular minimum of its polygon, so each vertex set appears once
  std::function<void(int)> extend = [&](int from) {
    for (int j = from; j < n; ++j) {
      const Pt& p = pts[chain.back()];
      const Pt& q = pts[j];
      if (lcross(p, q) <= 0) continue;
      if (!local_ok(p, q)) continue;
      if (chain.size() >= 2) {
        const Pt& o = pts[chain[chain.size() - 2]];
        Pt e0{p.x - o.x, p.y - o.y};
        Pt e1{q.x - p.x, q.y - p.y};
        if (lcross(e0, e1) <= 0) continue;
      }
      chain.push_back(j);
      if (chain.size() >= 3) emit(chain);
      if (static_cast<int>(chain.size()) < max_vertices) extend(j + 1);
      chain.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    chain = {s};
    extend(s + 1);
  }
  return out;
}

ResultRecord analyze_record(const std::string& id, const FanoPolytope& p,
                            const ClassifyOptions& opt) {
  ResultRecord r;
  r.id = id;
  r.canonical_key = canonical_key(p);
  r.dimension = p.dim;
  r.vertex_count = static_cast<int>(p.poly.vertices.size());
  r.gorenstein_index = gorenstein_index(p);
  r.smooth = is_smooth(p);
  r.symmetric = is_symmetric(p);
  r.kahler_einstein = is_kahler_einstein(p);
  ClassifyOptions copt = opt;
  copt.flags = false;
  auto [verdict, traj] = classify(p, copt);
  r.verdict = verdict.to_string();
  std::ostringstream os;
  for (size_t i = 0; i < traj.entries.size(); ++i) {
    if (i) os << '>';
    os << traj.entries[i].vertex_count;
  }
  r.trajectory_summary = os.str();
  return r;
}

namespace {

json record_to_json(const ResultRecord& r) {
  json j;
  j["id"] = r.id;
  j["canonical_key"] = r.canonical_key;
  j["dimension"] = r.dimension;
  j["vertex_count"] = r.vertex_count;
  j["gorenstein_index"] = r.gorenstein_index.get_str();
  j["smooth"] = r.smooth;
  j["symmetric"] = r.symmetric;
  j["kahler_einstein"] = r.kahler_einstein;
  j["verdict"] = r.verdict;
  j["trajectory_summary"] = r.trajectory_summary;
  j["engine_version"] = r.engine_version;
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.id = j.at("id").get<std::string>();
  r.canonical_key = j.at("canonical_key").get<std::string>();
  r.dimension = j.at("dimension").get<int>();
  r.vertex_count = j.at("vertex_count").get<int>();
  r.gorenstein_index = Int(j.at("gorenstein_index").get<std::string>());
  r.smooth = j.at("smooth").get<bool>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.kahler_einstein = j.at("kahler_einstein").get<bool>();
  r.verdict = j.at("verdict").get<std::string>();
  r.trajectory_summary = j.at("trajectory_summary").get<std::string>();
  r.engine_version = j.at("engine_version").get<std::string>();
  return r;
}

}  // namespace

ResultsStore::ResultsStore(std::string path) : path_(std::move(path)) {}

void ResultsStore::append(const ResultRecord& r) {
  std::ofstream os(path_, std::ios::app);
  if (!os) throw std::runtime_error("results store not writable: " + path_);
  os << record_to_json(r).dump() << '\n';
  if (!os) throw std::runtime_error("results store write failed: " + path_);
}

std::vector<ResultRecord> ResultsStore::query(const Query& q) const {
  std::vector<ResultRecord> out;
  std::ifstream is(path_);
  if (!is) return out;  // absent store = empty store
  std::string ln;
  while (std::getline(is, ln)) {
    if (ln.empty()) continue;
    ResultRecord r;
    try {
      r = record_from_json(json::parse(ln));
    } catch (...) {
      continue;  // foreign or truncated line
    }
    if (r.engine_version != kEngineVersion) continue;
    if (q.canonical_key && r.canonical_key != *q.canonical_key) continue;
    if (q.dimension && r.dimension != *q.dimension) continue;
    if (q.gorenstein_index && r.gorenstein_index != *q.gorenstein_index)
      continue;
    if (q.verdict_kind && r.verdict.rfind(*q.verdict_kind, 0) != 0) continue;
    out.push_back(std::move(r));
  }
  return out;
}

bool ResultsStore::contains(const CanonicalKey& key) const {
  Query q;
  q.canonical_key = key;
  return !query(q).empty();
}

std::string render_trajectory_svg(const Trajectory& traj) {
  const double cell = 160.0, pad = 16.0;
  const size_t n = traj.entries.size();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << cell * n << "\" height=\"" << cell + 24 << "\">\n";
  for (size_t i = 0; i < n; ++i) {
    const auto& e = traj.entries[i];
    double ox = cell * i;
    double mx = 1.0;
    for (const auto& v : e.polytope.poly.vertices)
      for (const auto& c : v) {
        double a = std::abs(c.get_d());
        if (a > mx) mx = a;
      }
    double scale = (cell / 2 - pad) / mx;
    auto px = [&](const Rat& c) { return ox + cell / 2 + c.get_d() * scale; };
    auto py = [&](const Rat& c) { return cell / 2 - c.get_d() * scale; };
    os << "  <polygon points=\"";
    for (const auto& v : e.polytope.poly.vertices)
      os << px(v[0]) << ',' << py(v[1]) << ' ';
    os << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <circle cx=\"" << ox + cell / 2 << "\" cy=\"" << cell / 2
       << "\" r=\"2\" fill=\"red\"/>\n";
    os << "  <text x=\"" << ox + 4 << "\" y=\"" << cell + 16
       << "\" font-size=\"12\">B^" << e.step << " (" << e.vertex_count
       << " vertices)</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fanob
