// hypercone: command-line front end.
//
// Exit status: 0 success, 1 claim mismatch (--expected), 2 usage or input
// error, 3 internal failure.

#include "hypercone/cone_io.hpp"
#include "hypercone/hypermetric.hpp"
#include "hypercone/pipeline.hpp"
#include "hypercone/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

using namespace hypercone;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string family;
  int n = 0;
  std::string input;
  std::string graph;
  std::string bvectors;
  std::string output;
  std::string format = "text";
  int jobs = 1;
  bool expected = false;
  std::size_t index = 0;
  bool unpruned = false;
  bool exhaustive = false;
  int max_abs = 3;
};

bool json_format(const Options& o) { return o.format == "json"; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_hyp7(const Options& o) {
  if (o.n != 0 && o.n != kPoints) throw UsageError(o.verb + " is only available for --n 7");
}

int mismatch_exit(const Options& o, const std::vector<std::string>& mismatches) {
  return o.expected && !mismatches.empty() ? kMismatch : kOk;
}

// Sym(n) orbits of the rows of a matrix, in order of first appearance.
struct RowOrbit {
  IntVector canonical;
  std::vector<std::size_t> rows;
  std::size_t full_size = 0;
};

std::vector<RowOrbit> group_rows(const IntMatrix& m, int n) {
  std::vector<RowOrbit> out;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> index;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    IntVector canon = canonical_form(m.row(r).transpose(), n);
    auto [it, inserted] = index.emplace(canon, out.size());
    if (inserted) out.push_back({std::move(canon), {}, 0});
    out[it->second].rows.push_back(static_cast<std::size_t>(r));
  }
  for (RowOrbit& o : out) o.full_size = orbit(o.canonical, n).size();
  return out;
}

std::string sizes_text(const std::vector<RowOrbit>& orbits) {
  std::string s;
  for (const RowOrbit& o : orbits) s += (s.empty() ? "" : ",") + std::to_string(o.rows.size());
  return "(" + s + ")";
}

Json row_orbits_json(const std::vector<RowOrbit>& orbits, const IntMatrix& m) {
  Json out = Json::array();
  for (const RowOrbit& o : orbits) {
    out.push_back(Json{{"canonical", vector_json(o.canonical)},
                       {"representative", vector_json(m.row(static_cast<Eigen::Index>(o.rows.front())).transpose())},
                       {"count", o.rows.size()},
                       {"full_orbit_size", o.full_size},
                       {"closed", o.rows.size() == o.full_size}});
  }
  return out;
}

int run_generate(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("generate needs --n");
  if (o.family == "hyp" && (o.n < 3 || o.n > 7)) throw UsageError("generate hyp supports 3 <= n <= 7");
  if (o.family == "met" && (o.n < 3 || o.n > 8)) throw UsageError("generate met supports 3 <= n <= 8");
  if (o.family == "cut" && (o.n < kMinCutPoints || o.n > kMaxCutPoints)) {
    throw UsageError("generate cut supports 3 <= n <= 8");
  }
  Cone cone = o.family == "hyp" ? Cone(generate_hyp(o.n)) : o.family == "met" ? Cone(generate_met(o.n))
                                                                               : Cone(generate_cuts(o.n));
  const IntMatrix& m = std::visit([](const auto& c) -> const IntMatrix& { return c.matrix(); }, cone);
  const auto orbits = group_rows(m, o.n);
  const char* noun = std::holds_alternative<HCone>(cone) ? "inequalities" : "rays";
  if (json_format(o)) {
    Json j = report_envelope("cone");
    j["family"] = o.family;
    j["cone"] = cone_json(cone);
    j["orbits"] = row_orbits_json(orbits, m);
    emit_json(out, j);
  } else {
    write_cone(out, cone);
  }
  std::cerr << m.rows() << ' ' << noun << " in " << orbits.size() << " orbits " << sizes_text(orbits) << '\n';
  return kOk;
}

int run_orbits(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("orbits needs --file");
  const Cone cone = read_cone_file(o.input);
  const int n = std::visit([](const auto& c) { return c.points(); }, cone);
  if (n > 8) throw UsageError("orbits supports n <= 8");
  if (o.n != 0 && o.n != n) throw UsageError("--n does not match the file header");
  const IntMatrix& m = std::visit([](const auto& c) -> const IntMatrix& { return c.matrix(); }, cone);
  const auto orbits = group_rows(m, n);
  if (json_format(o)) {
    Json j = report_envelope("orbits");
    j["n"] = n;
    j["count"] = m.rows();
    j["orbits"] = row_orbits_json(orbits, m);
    emit_json(out, j);
  } else {
    out << m.rows() << " vectors in " << orbits.size() << " orbits " << sizes_text(orbits) << '\n';
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      const RowOrbit& r = orbits[k];
      out << std::setw(4) << k + 1 << std::setw(7) << r.rows.size() << (r.rows.size() == r.full_size ? "  " : "* ")
          << to_string(m.row(static_cast<Eigen::Index>(r.rows.front())).transpose()) << '\n';
    }
    if (std::any_of(orbits.begin(), orbits.end(), [](const RowOrbit& r) { return r.rows.size() != r.full_size; })) {
      out << "* orbit only partly present in the file\n";
    }
  }
  return kOk;
}

int run_subcone(const Options& o, std::ostream& out) {
  require_hyp7(o);
  if (o.index < 1 || o.index > kSubconeCount) throw UsageError("--index must be in 1..26");
  SubconeOptions options;
  options.prune = !o.unpruned;
  options.method = o.exhaustive ? RedundancyMethod::kExhaustive : RedundancyMethod::kIncremental;
  const SubconeResult s = solve_subcone(o.index - 1, options);

  std::vector<std::string> mismatches;
  const std::size_t cuts = static_cast<std::size_t>(std::count(s.is_cut.begin(), s.is_cut.end(), true));
  if (s.kept.size() != 21 || s.rays.size() != 21 || cuts != 20) {
    mismatches.push_back("expected 21 facets and 21 rays of which 20 cuts");
  }
  const auto reference = hyp7_ray_representatives()[o.index - 1].coords();
  if (!equal(canonical_form(s.non_cut_ray().coords(), kPoints), canonical_form(reference, kPoints))) {
    mismatches.push_back("non-cut ray is not in the orbit of R_" + std::to_string(o.index + kCutOrbitCount));
  }
  if (json_format(o)) {
    Json j = report_envelope("subcone");
    j["subcone"] = subcone_json(s);
    j["mismatches"] = mismatches;
    emit_json(out, j);
  } else {
    write_subcone_text(out, s);
    if (o.expected) write_mismatches_text(out, mismatches);
  }
  return mismatch_exit(o, mismatches);
}

int run_analysis(const Options& o, std::ostream& out) {
  require_hyp7(o);
  if (o.max_abs < 1 || o.max_abs > 6) throw UsageError("--max-abs must be in 1..6");
  AnalysisOptions options;
  options.jobs = o.jobs;
  options.completeness = o.verb == "census" || o.verb == "verify";
  options.completeness_max_abs = o.max_abs;
  const Hyp7Analysis a = analyze_hyp7(options);

  std::vector<std::string> mismatches;
  if (o.verb == "census") {
    mismatches = claim_mismatches(a);
    if (json_format(o)) {
      emit_json(out, analysis_json(a, mismatches, o.max_abs));
    } else {
      write_analysis_text(out, a, mismatches, o.max_abs);
    }
    return mismatch_exit(o, mismatches);
  }
  if (o.verb == "tables") {
    mismatches = diff_against_reference(a.census, a.incidence, a.ray_adjacency, a.facet_adjacency);
    if (!a.incidence.double_counting_ok || !a.ray_adjacency.double_counting_ok ||
        !a.facet_adjacency.double_counting_ok) {
      mismatches.push_back("double counting fails");
    }
    if (json_format(o)) {
      Json j = report_envelope("tables");
      j["incidence"] = incidence_json(a.incidence);
      j["ray_adjacency"] = adjacency_json(a.ray_adjacency, "R");
      j["facet_adjacency"] = adjacency_json(a.facet_adjacency, "F");
      j["mismatches"] = mismatches;
      emit_json(out, j);
    } else {
      write_tables_text(out, a);
      if (o.expected) write_mismatches_text(out, mismatches);
    }
    return mismatch_exit(o, mismatches);
  }
  if (o.verb == "diameters") {
    const DiameterReport& d = a.diameters;
    if (d.skeleton.diameter != 3) mismatches.push_back("skeleton diameter is not 3");
    if (d.ridge.diameter != 3) mismatches.push_back("ridge diameter is not 3");
    if (!d.skeleton_witness_ok) mismatches.push_back("skeleton witness has shared cut neighbors");
    if (json_format(o)) {
      Json j = report_envelope("diameters");
      j["diameters"] = diameters_json(a.census, d);
      j["mismatches"] = mismatches;
      emit_json(out, j);
    } else {
      write_diameters_text(out, a.census, d);
      if (o.expected) write_mismatches_text(out, mismatches);
    }
    return mismatch_exit(o, mismatches);
  }
  // verify
  const CompletenessReport& c = *a.completeness;
  if (!c.complete) mismatches.push_back("sweep does not recover exactly b^1..b^14");
  if (json_format(o)) {
    Json j = report_envelope("verify");
    j["completeness"] = completeness_json(c, o.max_abs);
    j["seconds"] = a.seconds.at("completeness");
    j["mismatches"] = mismatches;
    emit_json(out, j);
  } else {
    write_completeness_text(out, c, o.max_abs);
    if (o.expected) write_mismatches_text(out, mismatches);
  }
  return mismatch_exit(o, mismatches);
}

int run_switch_classes(const Options& o, std::ostream& out) {
  require_hyp7(o);
  const SwitchingClasses s = switching_classes();
  std::vector<std::string> mismatches;
  std::vector<std::size_t> sizes;
  for (const auto& c : s.classes) sizes.push_back(c.size());
  if (sizes != std::vector<std::size_t>{3, 4, 7, 7, 5}) mismatches.push_back("class sizes differ from (3,4,7,7,5)");
  if (!s.labels_ok) mismatches.push_back("a tabulated switching label does not reproduce its row");
  if (json_format(o)) {
    Json j = report_envelope("switch-classes");
    j["switching"] = switching_json(s);
    j["mismatches"] = mismatches;
    emit_json(out, j);
  } else {
    write_switching_text(out, s);
    if (o.expected) write_mismatches_text(out, mismatches);
  }
  return mismatch_exit(o, mismatches);
}

IntVector read_input_vector(const Options& o) {
  if (o.input.empty() == o.graph.empty()) throw UsageError(o.verb + " needs exactly one of --file and --graph");
  if (!o.input.empty()) {
    std::ifstream in = open_input(o.input);
    return read_vector(in, o.input);
  }
  std::ifstream in = open_input(o.graph);
  return path_metric(read_graph(in, o.graph)).coords();
}

int checked_points(const Options& o, const IntVector& v) {
  int n = 0;
  try {
    n = points_for_length(v.size());
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
  if (o.n != 0 && o.n != n) throw UsageError("--n does not match the vector length");
  if (n < 3 || n > 7) throw UsageError(o.verb + " supports 3 <= n <= 7");
  return n;
}

std::optional<CutSet> as_cut(int n, const IntVector& v) {
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    const CutSet s = CutSet::from_mask(n, mask);
    if (equal(cut_vector(s).coords(), v)) return s;
  }
  return std::nullopt;
}

int run_check_ray(const Options& o, std::ostream& out) {
  const IntVector v = read_input_vector(o);
  const int n = checked_points(o, v);
  if (v.isZero()) throw InputError("the zero vector is not a ray");
  const RayVector r(v);
  const HCone hyp = n == kPoints ? build_hyp7() : generate_hyp(n);

  Json j = report_envelope("check-ray");
  j["n"] = n;
  j["ray"] = vector_json(r.coords());
  try {
    const auto tight = tight_set(hyp, r);
    const bool extreme = is_extreme_ray(hyp, r);
    std::string orbit_name = "none";
    if (const auto cut = as_cut(n, r.coords())) {
      orbit_name = "cut";
      j["cut_set"] = cut->label();
    } else if (extreme && n == kPoints) {
      const IntVector canon = canonical_form(r.coords(), n);
      const auto reps = hyp7_ray_representatives();
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (equal(canonical_form(reps[k].coords(), n), canon)) orbit_name = "R_" + std::to_string(k + kCutOrbitCount + 1);
      }
    } else if (extreme) {
      orbit_name = "non-cut";
    }
    j["in_cone"] = true;
    j["extreme"] = extreme;
    j["orbit"] = orbit_name;
    j["tight_facets"] = tight.size();
    if (json_format(o)) {
      emit_json(out, j);
    } else {
      out << "extreme: " << (extreme ? "true" : "false") << ", orbit: " << orbit_name
          << ", tight facets: " << tight.size() << '\n';
    }
  } catch (const NotInConeError& e) {
    const IntVector& f = hyp[e.inequality()].coeffs();
    j["in_cone"] = false;
    j["extreme"] = false;
    j["violated_inequality"] = vector_json(f);
    j["value"] = e.value();
    if (json_format(o)) {
      emit_json(out, j);
    } else {
      out << "extreme: false, in cone: false, violated inequality: " << to_string(f) << " (value " << e.value()
          << ")\n";
    }
  }
  return kOk;
}

// Extreme rays of HYP_n: the cuts for n <= 6; for n = 7 the orbits of the
// built-in representatives R_1..R_29.
VCone hyp_rays(int n) {
  if (n < kPoints) return generate_cuts(n);
  std::vector<IntVector> reps;
  for (const RayVector& r : hyp7_cut_representatives()) reps.push_back(r.coords());
  for (const RayVector& r : hyp7_ray_representatives()) reps.push_back(r.coords());
  const OrbitTable table(kPoints, std::move(reps));
  std::vector<RayVector> rays;
  rays.reserve(table.member_count());
  for (const IntVector& m : table.members()) rays.emplace_back(m);
  return VCone(kPoints, std::move(rays));
}

Json check_facet(const VCone& rays, const Inequality& f, std::string& line) {
  const int n = rays.points();
  Json j{{"inequality", vector_json(f.coeffs())}};
  try {
    const bool facet = is_facet(rays, f);
    std::size_t incident = 0;
    for (const RayVector& r : rays.rays()) incident += evaluate(f, r) == 0;
    std::string orbit_name = "none";
    const IntVector canon = canonical_form(f.coeffs(), n);
    const auto bs = hyp7_facet_representatives();
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const IntVector& b = bs[k].values();
      if (b.tail(kPoints - n).any()) continue;
      const Inequality h = hypermetric_inequality(BVector(IntVector(b.head(n))));
      if (equal(canonical_form(h.coeffs(), n), canon)) orbit_name = "F_" + std::to_string(k + 1);
    }
    j["valid"] = true;
    j["facet"] = facet;
    j["orbit"] = orbit_name;
    j["incident_rays"] = incident;
    line = std::string("valid: true, facet: ") + (facet ? "true" : "false") + ", orbit: " + orbit_name +
           ", incident rays: " + std::to_string(incident);
  } catch (const InvalidInequalityError& e) {
    j["valid"] = false;
    j["facet"] = false;
    j["violating_ray"] = vector_json(rays[e.ray()].coords());
    j["value"] = e.value();
    line = "valid: false, facet: false, violating ray: " + to_string(rays[e.ray()].coords());
  }
  return j;
}

int run_check_facet(const Options& o, std::ostream& out) {
  const int sources = !o.input.empty() + !o.bvectors.empty();
  if (sources != 1) throw UsageError("check-facet needs exactly one of --file and --bvectors");
  std::vector<Inequality> list;
  std::vector<std::optional<BVector>> origin;
  if (!o.input.empty()) {
    std::ifstream in = open_input(o.input);
    const IntVector v = read_vector(in, o.input);
    checked_points(o, v);
    if (v.isZero()) throw InputError("the zero vector is not an inequality");
    list.emplace_back(v);
    origin.emplace_back();
  } else {
    std::ifstream in = open_input(o.bvectors);
    for (BVector& b : read_bvectors(in, o.bvectors)) {
      list.push_back(hypermetric_inequality(b));
      origin.emplace_back(std::move(b));
    }
    if (list.empty()) throw InputError(o.bvectors + ": no b-vectors");
    checked_points(o, list.front().coeffs());
  }
  const int n = points_for_length(list.front().size());
  const VCone rays = hyp_rays(n);

  Json results = Json::array();
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::string line;
    Json j = check_facet(rays, list[k], line);
    if (origin[k]) {
      j["b"] = vector_json(origin[k]->values());
      line = to_string(origin[k]->values()) + "  " + line;
    }
    results.push_back(std::move(j));
    if (!json_format(o)) out << line << '\n';
  }
  if (json_format(o)) {
    Json j = report_envelope("check-facet");
    j["n"] = n;
    j["ray_count"] = rays.size();
    j["results"] = std::move(results);
    emit_json(out, j);
  }
  return kOk;
}

int dispatch(const Options& o, std::ostream& out) {
  if (o.verb == "generate") return run_generate(o, out);
  if (o.verb == "orbits") return run_orbits(o, out);
  if (o.verb == "subcone") return run_subcone(o, out);
  if (o.verb == "census" || o.verb == "tables" || o.verb == "diameters" || o.verb == "verify") {
    return run_analysis(o, out);
  }
  if (o.verb == "switch-classes") return run_switch_classes(o, out);
  if (o.verb == "check-ray") return run_check_ray(o, out);
  if (o.verb == "check-facet") return run_check_facet(o, out);
  throw UsageError("unknown verb " + o.verb);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--output,-o", o.output, "write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
}

void add_n(CLI::App* cmd, Options& o) { cmd->add_option("--n", o.n, "number of points")->check(CLI::Range(2, 64)); }
void add_jobs(CLI::App* cmd, Options& o) {
  cmd->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::Range(1, 256));
}
void add_expected(CLI::App* cmd, Options& o) {
  cmd->add_flag("--expected", o.expected, "compare against the reference values; exit 1 on mismatch");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Extreme rays, facets and face structure of hypermetric cones", "hypercone"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "emit the cone file of HYP_n, MET_n or CUT_n");
  generate->add_option("family", o.family, "hyp, met or cut")->required()->check(CLI::IsMember({"hyp", "met", "cut"}));
  add_n(generate, o);
  add_common(generate, o);

  auto* orbits = app.add_subcommand("orbits", "split the vectors of a cone file into Sym(n) orbits");
  orbits->add_option("--file,--input", o.input, "cone file")->required();
  add_n(orbits, o);
  add_common(orbits, o);

  auto* subcone = app.add_subcommand("subcone", "solve the subcone cut out of HYP_7 by O_i");
  subcone->add_option("--index,-i", o.index, "i in 1..26")->required();
  subcone->add_flag("--unpruned", o.unpruned, "probe every row instead of one per stabilizer orbit");
  subcone->add_flag("--exhaustive", o.exhaustive, "probe each row against all others");
  add_n(subcone, o);
  add_expected(subcone, o);
  add_common(subcone, o);

  auto* census = app.add_subcommand("census", "full HYP_7 computation and report");
  auto* tables = app.add_subcommand("tables", "incidence and adjacency tables of HYP_7");
  auto* diameters_cmd = app.add_subcommand("diameters", "skeleton and ridge graph diameters of HYP_7");
  auto* verify = app.add_subcommand("verify", "b-vector completeness sweep for the facets of HYP_7");
  for (auto* cmd : {census, tables, diameters_cmd, verify}) {
    add_n(cmd, o);
    add_jobs(cmd, o);
    add_expected(cmd, o);
    add_common(cmd, o);
  }
  for (auto* cmd : {census, verify}) {
    cmd->add_option("--max-abs", o.max_abs, "entry bound of the completeness sweep");
  }

  auto* switch_cmd = app.add_subcommand("switch-classes", "switching classes of the 26 non-hypermetric CUT_7 facets");
  add_n(switch_cmd, o);
  add_expected(switch_cmd, o);
  add_common(switch_cmd, o);

  auto* check_ray = app.add_subcommand("check-ray", "membership and extremality of a vector in HYP_n");
  check_ray->add_option("--file,--input", o.input, "vector or one-vector cone file");
  check_ray->add_option("--graph", o.graph, "graph file; its path metric is checked");
  add_n(check_ray, o);
  add_common(check_ray, o);

  auto* check_facet = app.add_subcommand("check-facet", "validity and facetness of an inequality for HYP_n");
  check_facet->add_option("--file,--input", o.input, "inequality vector or one-vector cone file");
  check_facet->add_option("--bvectors", o.bvectors, "b-vector file; each hypermetric inequality is checked");
  add_n(check_facet, o);
  add_common(check_facet, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    std::ostringstream buffer;
    const int status = dispatch(o, buffer);
    if (o.output.empty()) {
      std::cout << buffer.str() << std::flush;
    } else {
      std::ofstream file(o.output);
      if (!(file << buffer.str())) {
        std::cerr << "hypercone: cannot write '" << o.output << "'\n";
        return kUsage;
      }
    }
    return status;
  } catch (const UsageError& e) {
    std::cerr << "hypercone " << o.verb << ": " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "hypercone " << o.verb << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hypercone " << o.verb << ": internal failure: " << e.what() << '\n';
    return kInternal;
  }
}
