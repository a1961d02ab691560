#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fanob/io.hpp"

namespace fanob {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

struct InputOptions {
  std::string polytope;  // inline plain-format vertices
  std::string file;
  std::string format = "plain";
  bool transpose = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool positional) {
  if (positional)
    cmd->add_option("polytope", in.polytope,
                    "vertices, e.g. \"(2,-1);(0,1);(-1,0)\"");
  cmd->add_option("--file", in.file, "read polytopes from a file");
  cmd->add_option("--format", in.format, "plain|json|grdb-matrix")
      ->check(CLI::IsMember({"plain", "json", "grdb-matrix"}));
  cmd->add_flag("--transpose", in.transpose,
                "grdb-matrix rows are vertices, not coordinates");
}

std::vector<PolytopeRecord> load_inputs(const InputOptions& in) {
  if (!in.polytope.empty())
    return parse(in.polytope + "\n", Format::Plain);
  if (in.file.empty())
    throw std::invalid_argument("no input: pass vertices or --file");
  std::ifstream is(in.file);
  if (!is) throw std::invalid_argument("cannot open file: " + in.file);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse(buf.str(), parse_format_name(in.format), in.transpose);
}

FanoPolytope load_one_fano(const InputOptions& in) {
  auto recs = load_inputs(in);
  if (recs.size() != 1)
    throw std::invalid_argument("expected exactly one polytope, got " +
                                std::to_string(recs.size()));
  FanoResult r = validate_fano(recs[0].vertices);
  if (auto* fail = std::get_if<FanoFailure>(&r))
    throw std::invalid_argument(std::string("not a Fano polytope: ") +
                                fano_failure_name(*fail));
  return std::get<FanoPolytope>(std::move(r));
}

std::string vertices_line(const std::vector<LatVec>& verts) {
  std::ostringstream os;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) os << ';';
    os << vec_to_string(verts[i]);
  }
  return os.str();
}

std::optional<ResultsStore> store_from_env(const std::string& flag_path) {
  if (!flag_path.empty()) return ResultsStore(flag_path);
  const char* env = std::getenv(kStoreEnvVar);
  if (env && *env) return ResultsStore(env);
  return std::nullopt;
}

int cmd_analyze(const InputOptions& in, const std::string& store_path) {
  FanoPolytope p = load_one_fano(in);
  ResultRecord r = analyze_record("cli", p);
  std::cout << "dimension: " << r.dimension << '\n'
            << "vertices: " << r.vertex_count << '\n'
            << "gorenstein_index: " << r.gorenstein_index << '\n'
            << "centroid: " << vec_to_string(centroid(p.poly)) << '\n'
            << "smooth: " << (r.smooth ? "true" : "false") << '\n'
            << "symmetric: " << (r.symmetric ? "true" : "false") << '\n'
            << "kahler_einstein: " << (r.kahler_einstein ? "true" : "false")
            << '\n'
            << "verdict: " << r.verdict << '\n'
            << "canonical_key: " << r.canonical_key << '\n';
  if (p.dim == 2)
    std::cout << "rotation: " << (has_nontrivial_rotation(p) ? "true" : "false")
              << '\n';
  if (auto store = store_from_env(store_path)) store->append(r);
  return kExitOk;
}

int cmd_transform(const InputOptions& in, int steps) {
  FanoPolytope p = load_one_fano(in);
  for (int s = 1; s <= steps; ++s) {
    FanoResult r = b_transform_fano(p);
    if (auto* fail = std::get_if<FanoFailure>(&r)) {
      VPolytope raw = b_transform(p);
      std::cout << "step " << s << ": not Fano (" << fano_failure_name(*fail)
                << ")";
      if (raw.is_lattice())
        std::cout << " hull " << vertices_line(raw.lattice_vertices());
      std::cout << '\n';
      return kExitOk;
    }
    p = std::get<FanoPolytope>(std::move(r));
  }
  std::cout << vertices_line(p.vertices()) << '\n';
  return kExitOk;
}

int cmd_classify(const InputOptions& in, const ClassifyOptions& opt,
                 int raw_steps) {
  FanoPolytope p = load_one_fano(in);
  auto [verdict, traj] = classify(p, opt);
  std::cout << "verdict: " << verdict.to_string() << '\n';
  for (const auto& e : traj.entries) {
    std::cout << "B^" << e.step << ": " << vertices_line(e.polytope.vertices())
              << "  [vertices=" << e.vertex_count;
    if (opt.flags)
      std::cout << " KE=" << (e.kahler_einstein ? "true" : "false")
                << " symmetric=" << (e.symmetric ? "true" : "false")
                << " smooth=" << (e.smooth ? "true" : "false");
    std::cout << "]\n";
  }
  if (verdict.kind == VerdictKind::StrictType && raw_steps > 0) {
    auto last = traj.entries.back().polytope.vertices();
    int base = traj.entries.back().step;
    int k = 1;
    for (const auto& pts : raw_extension(last, raw_steps))
      std::cout << "raw B^" << base + k++ << ": " << vertices_line(pts) << '\n';
  }
  if (verdict.kind == VerdictKind::Unresolved && verdict.resource_abort)
    return kExitResource;
  return kExitOk;
}

int cmd_orbit(const InputOptions& in, int budget, bool include_start) {
  FanoPolytope p = load_one_fano(in);
  OrbitResult r = orbit_classes(p, budget, include_start);
  std::cout << "classes: " << r.classes.size()
            << (r.complete ? "" : " (incomplete)") << '\n';
  for (const auto& k : r.classes) std::cout << k << '\n';
  return kExitOk;
}

int cmd_census(const InputOptions& in, const CensusOptions& opt,
               const std::string& out_format, const std::string& store_path) {
  auto recs = load_inputs(in);
  std::vector<std::vector<LatVec>> inputs;
  for (auto& r : recs) inputs.push_back(std::move(r.vertices));
  CensusResult res = census(inputs, opt);
  int max_k = 0;
  for (const auto& row : res.rows)
    for (const auto& [k, cnt] : row.strict_counts) max_k = std::max(max_k, k);
  if (out_format == "csv" || out_format == "text") {
    const char sep = out_format == "csv" ? ',' : '\t';
    std::cout << "dim" << sep << "index";
    for (int k = 0; k <= max_k; ++k) std::cout << sep << 'B' << k;
    std::cout << sep << "Binf" << sep << "unresolved" << sep << "total" << sep
              << "KE\n";
    for (const auto& row : res.rows) {
      std::cout << row.dimension << sep << row.index;
      for (int k = 0; k <= max_k; ++k) {
        auto it = row.strict_counts.find(k);
        std::cout << sep << (it == row.strict_counts.end() ? 0 : it->second);
      }
      std::cout << sep << row.periodic << sep << row.unresolved << sep
                << row.total << sep << row.kahler_einstein << '\n';
    }
    std::cout << "# malformed=" << res.malformed
              << " duplicates=" << res.duplicates << '\n';
  } else {  // json
    std::cout << "{\"rows\":[";
    for (size_t i = 0; i < res.rows.size(); ++i) {
      const auto& row = res.rows[i];
      if (i) std::cout << ',';
      std::cout << "{\"dimension\":" << row.dimension << ",\"index\":\""
                << row.index << "\",\"strict\":{";
      bool first = true;
      for (const auto& [k, cnt] : row.strict_counts) {
        if (!first) std::cout << ',';
        first = false;
        std::cout << '"' << k << "\":" << cnt;
      }
      std::cout << "},\"periodic\":" << row.periodic
                << ",\"unresolved\":" << row.unresolved
                << ",\"total\":" << row.total
                << ",\"kahler_einstein\":" << row.kahler_einstein << '}';
    }
    std::cout << "],\"malformed\":" << res.malformed
              << ",\"duplicates\":" << res.duplicates << "}\n";
  }
  if (auto store = store_from_env(store_path)) {
    for (const auto& pts : inputs) {
      FanoResult r = validate_fano(pts);
      if (auto* f = std::get_if<FanoPolytope>(&r)) {
        CanonicalKey key = canonical_key(*f);
        if (!store->contains(key)) store->append(analyze_record(key, *f));
      }
    }
  }
  return kExitOk;
}

int cmd_enumerate(long box, int max_vertices, long index, bool have_index) {
  auto recs = enumerate_fano_polygons(
      box, max_vertices, have_index ? std::optional<long>(index) : std::nullopt);
  std::cout << serialize(recs, Format::Plain);
  return kExitOk;
}

int cmd_svg(const InputOptions& in, const std::string& out_path, int budget) {
  FanoPolytope p = load_one_fano(in);
  if (p.dim != 2) throw std::invalid_argument("svg: 2D polytopes only");
  ClassifyOptions opt;
  opt.budget = budget;
  auto [verdict, traj] = classify(p, opt);
  std::string doc = render_trajectory_svg(traj);
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot write: " + out_path);
    os << doc;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Fano polytope barycentric-transformation toolkit"};
  app.require_subcommand(1);

  InputOptions in;
  ClassifyOptions copt;
  CensusOptions census_opt;
  std::string store_path, out_format = "text", svg_out;
  int steps = 1, raw_steps = 3, budget = 64, window = 4;
  long box = 3, index = 1;
  int max_vertices = 6;
  bool include_start = false, no_dedup = false;

  auto* analyze = app.add_subcommand("analyze", "all predicates and the index");
  add_input_options(analyze, in, true);
  analyze->add_option("--store", store_path, "results store path");

  auto* transform = app.add_subcommand("transform", "emit B^n(P)");
  add_input_options(transform, in, true);
  transform->add_option("-n,--steps", steps, "number of B-steps");

  auto* classify_cmd = app.add_subcommand("classify", "type verdict and trajectory");
  add_input_options(classify_cmd, in, true);
  classify_cmd->add_option("--budget", copt.budget, "iteration budget");
  classify_cmd->add_option("--max-hull-vertices", copt.max_hull_vertices,
                           "abort ceiling for intermediate hull size");
  classify_cmd->add_option("--raw-steps", raw_steps,
                           "formula continuation steps after a Fano failure");

  auto* orbit = app.add_subcommand("orbit", "orbit classes under B");
  add_input_options(orbit, in, true);
  orbit->add_option("--budget", budget, "iteration budget");
  orbit->add_flag("--include-start", include_start, "count B^0 as an orbit member");

  auto* census_cmd = app.add_subcommand("census", "grouped strict-type tables");
  add_input_options(census_cmd, in, false);
  census_cmd->add_option("--budget", census_opt.budget, "iteration budget");
  census_cmd->add_flag("--smooth-only", census_opt.smooth_only,
                       "restrict to smooth polytopes");
  census_cmd->add_flag("--no-dedup", no_dedup,
                       "inputs are already canonical representatives");
  census_cmd->add_option("--output", out_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  census_cmd->add_option("--store", store_path, "results store path");

  auto* enumerate = app.add_subcommand("enumerate", "Fano polygons in a box");
  enumerate->add_option("--box", box, "coordinate bound B");
  enumerate->add_option("--max-vertices", max_vertices, "largest vertex count");
  auto* index_opt = enumerate->add_option("--index", index,
                                          "keep only this Gorenstein index");

  auto* svg = app.add_subcommand("svg", "render a 2D trajectory strip");
  add_input_options(svg, in, true);
  svg->add_option("-o,--out", svg_out, "output file (default stdout)");
  svg->add_option("--budget", budget, "iteration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(in, store_path);
    if (app.got_subcommand(transform)) return cmd_transform(in, steps);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(in, copt, raw_steps);
    if (app.got_subcommand(orbit)) return cmd_orbit(in, budget, include_start);
    if (app.got_subcommand(census_cmd)) {
      census_opt.dedup = !no_dedup;
      return cmd_census(in, census_opt, out_format, store_path);
    }
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(box, max_vertices, index, index_opt->count() > 0);
    if (app.got_subcommand(svg)) return cmd_svg(in, svg_out, budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace fanob
