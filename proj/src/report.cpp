#include "hypercone/report.hpp"

#include <iomanip>
#include <ostream>

namespace hypercone {

namespace {

std::string name(const std::string& prefix, std::size_t index) { return prefix + "_" + std::to_string(index + 1); }

Json names(const std::string& prefix, std::size_t count) {
  Json out = Json::array();
  for (std::size_t k = 0; k < count; ++k) out.push_back(name(prefix, k));
  return out;
}

Json matrix_json(const CountMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::size_t count_true(const std::vector<bool>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

Json vertex_json(const OrbitTable& t, const std::string& prefix, std::size_t member) {
  return Json{{"member", member}, {"orbit", name(prefix, t.orbit_of(member))}, {"vector", vector_json(t.member(member))}};
}

Json witness_json(const OrbitTable& t, const std::string& prefix, const DiameterResult& d) {
  return Json{{"diameter", d.diameter}, {"from", vertex_json(t, prefix, d.from)}, {"to", vertex_json(t, prefix, d.to)}};
}

void write_matrix(std::ostream& out, const CountMatrix& m, const std::string& row_prefix,
                  const std::string& col_prefix, std::size_t cols, const std::vector<std::int64_t>* totals,
                  const std::string& total_label) {
  constexpr int kWidth = 6;
  out << std::setw(kWidth) << "";
  for (std::size_t j = 0; j < cols; ++j) out << std::setw(kWidth) << name(col_prefix, j);
  if (totals) out << std::setw(kWidth + 2) << total_label;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << std::setw(kWidth) << name(row_prefix, i);
    for (std::size_t j = 0; j < cols; ++j) out << std::setw(kWidth) << m[i][j];
    if (totals) out << std::setw(kWidth + 2) << (*totals)[i];
    out << '\n';
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json report_envelope(const std::string& kind) {
  return Json{{"schema_version", kReportSchemaVersion}, {"report", kind}};
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Json orbit_table_json(const OrbitTable& t, const std::string& prefix) {
  Json out = Json::array();
  for (std::size_t o = 0; o < t.orbit_count(); ++o) {
    out.push_back(Json{{"name", name(prefix, o)},
                       {"size", t.orbit_size(o)},
                       {"representative", vector_json(t.representative(o))},
                       {"canonical", vector_json(t.canonical(o))}});
  }
  return out;
}

Json cone_json(const Cone& c) {
  return std::visit(
      [](const auto& cone) {
        using T = std::decay_t<decltype(cone)>;
        Json vectors = Json::array();
        for (Eigen::Index r = 0; r < cone.matrix().rows(); ++r) vectors.push_back(vector_json(cone.matrix().row(r).transpose()));
        return Json{{"kind", std::is_same_v<T, HCone> ? "H" : "V"},
                    {"n", cone.points()},
                    {"dim", cone.dim()},
                    {"count", cone.size()},
                    {"vectors", std::move(vectors)}};
      },
      c);
}

Json subcone_json(const SubconeResult& s) {
  Json rays = Json::array();
  for (std::size_t k = 0; k < s.rays.size(); ++k) {
    rays.push_back(Json{{"vector", vector_json(s.rays[k].coords())},
                        {"cut", static_cast<bool>(s.is_cut[k])},
                        {"opposite_facet", vector_json(s.facets[k].coeffs())}});
  }
  return Json{{"facet", name("O", s.index)},
              {"kept_rows", s.kept},
              {"facet_count", s.kept.size()},
              {"ray_count", s.rays.size()},
              {"cut_rays", count_true(s.is_cut)},
              {"non_cut_ray", vector_json(s.non_cut_ray().coords())},
              {"rays", std::move(rays)},
              {"lp_probes", s.lp_probes},
              {"stabilizer_order", s.stabilizer_order},
              {"seconds", s.seconds}};
}

Json incidence_json(const IncidenceTable& t) {
  return Json{{"rows", names("R", t.counts.size())},
              {"columns", names("F", t.counts.empty() ? 0 : t.counts.front().size())},
              {"counts", matrix_json(t.counts)},
              {"row_sums", t.row_sums},
              {"rays_per_facet", matrix_json(t.rays_per_facet)},
              {"double_counting_ok", t.double_counting_ok}};
}

Json adjacency_json(const AdjacencyTable& t, const std::string& prefix) {
  return Json{{"orbits", names(prefix, t.counts.size())},
              {"counts", matrix_json(t.counts)},
              {"totals", t.totals},
              {"double_counting_ok", t.double_counting_ok},
              {"rank_tests", t.rank_tests}};
}

Json diameters_json(const CensusReport& census, const DiameterReport& d) {
  return Json{{"skeleton", witness_json(census.ray_orbits, "R", d.skeleton)},
              {"ridge", witness_json(census.facet_orbits, "F", d.ridge)},
              {"cuts_only", witness_json(census.ray_orbits, "R", d.cuts_only)},
              {"skeleton_witness_ok", d.skeleton_witness_ok},
              {"local_graphs_complete", d.local_graphs_complete}};
}

Json correspondence_json(const Correspondence& c) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.violating_orbits.size(); ++i) {
    Json violating = Json::array();
    for (std::size_t o : c.violating_orbits[i]) violating.push_back(name("R", o));
    rows.push_back(Json{{"facet", name("O", i)},
                        {"violating_ray_orbits", std::move(violating)},
                        {"matches_reference_ray", static_cast<bool>(c.matches_reference_ray[i])}});
  }
  return Json{{"rows", std::move(rows)}, {"bijection_matches_table", c.bijection_matches_table}};
}

Json switching_json(const SwitchingClasses& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes) {
    Json members = Json::array();
    for (std::size_t k : c) members.push_back(name("O", k));
    classes.push_back(std::move(members));
  }
  Json sizes = Json::array();
  for (const auto& c : s.classes) sizes.push_back(c.size());
  return Json{{"classes", std::move(classes)}, {"sizes", std::move(sizes)}, {"labels_ok", s.labels_ok}};
}

Json completeness_json(const CompletenessReport& c, int max_abs) {
  Json facets = Json::array();
  for (std::size_t k = 0; k < c.facets.size(); ++k) {
    const int orbit = c.matched_orbits[k];
    facets.push_back(Json{{"b", vector_json(c.facets[k].values())},
                          {"orbit", orbit < 0 ? Json(nullptr) : Json(name("F", static_cast<std::size_t>(orbit)))}});
  }
  Json non_facets = Json::array();
  for (const BVector& b : c.valid_non_facets) non_facets.push_back(vector_json(b.values()));
  return Json{{"max_abs", max_abs},
              {"candidates", c.candidates},
              {"valid", c.valid},
              {"facets", std::move(facets)},
              {"valid_non_facets", std::move(non_facets)},
              {"complete", c.complete}};
}

Json faces_json(const std::vector<FaceWitness>& faces) {
  Json out = Json::array();
  for (const FaceWitness& w : faces) {
    Json matches = Json::array();
    for (std::size_t o : w.matching_cut7_orbits) matches.push_back(name("O", o));
    out.push_back(Json{{"facet", name("F", w.facet_orbit)},
                       {"expected", name("O", w.expected_cut7_orbit)},
                       {"matching", std::move(matches)},
                       {"triangle", vector_json(w.triangle)},
                       {"cut7_facet", vector_json(w.cut7_facet)},
                       {"incident_cuts", w.incident_cuts},
                       {"ok", w.ok}});
  }
  return out;
}

Json analysis_json(const Hyp7Analysis& a, const std::vector<std::string>& mismatches, int max_abs) {
  Json out = report_envelope("census");
  const CensusReport& c = a.census;
  Json subcones = Json::array();
  for (const SubconeResult& s : c.subcones) subcones.push_back(subcone_json(s));
  out["n"] = kPoints;
  out["facet_count"] = c.hyp7.size();
  out["ray_count"] = c.ray_count();
  out["facet_orbits"] = orbit_table_json(c.facet_orbits, "F");
  out["ray_orbits"] = orbit_table_json(c.ray_orbits, "R");
  out["subcones"] = std::move(subcones);
  out["incidence"] = incidence_json(a.incidence);
  out["ray_adjacency"] = adjacency_json(a.ray_adjacency, "R");
  out["facet_adjacency"] = adjacency_json(a.facet_adjacency, "F");
  out["diameters"] = diameters_json(c, a.diameters);
  out["correspondence"] = correspondence_json(a.correspondence);
  out["switching"] = switching_json(a.switching);
  out["completeness"] = a.completeness ? completeness_json(*a.completeness, max_abs) : Json(nullptr);
  out["faces"] = faces_json(a.faces);
  out["mismatches"] = mismatches;
  out["claims_hold"] = mismatches.empty();
  out["seconds"] = a.seconds;
  return out;
}

void write_orbits_text(std::ostream& out, const OrbitTable& t, const std::string& prefix) {
  out << t.member_count() << " vectors in " << t.orbit_count() << " orbits\n";
  for (std::size_t o = 0; o < t.orbit_count(); ++o) {
    out << std::setw(5) << name(prefix, o) << std::setw(7) << t.orbit_size(o) << "  " << to_string(t.representative(o))
        << '\n';
  }
}

void write_subcone_text(std::ostream& out, const SubconeResult& s) {
  out << "subcone " << name("O", s.index) << ": " << s.kept.size() << " facets, " << s.rays.size() << " rays ("
      << count_true(s.is_cut) << " cuts)\n"
      << "non-cut ray: " << to_string(s.non_cut_ray().coords()) << '\n'
      << "lp probes: " << s.lp_probes << ", stabilizer order: " << s.stabilizer_order << ", seconds: "
      << std::fixed << std::setprecision(2) << s.seconds << std::defaultfloat << '\n';
}

void write_tables_text(std::ostream& out, const Hyp7Analysis& a) {
  const std::size_t facets = a.census.facet_orbits.orbit_count();
  const std::size_t rays = a.census.ray_orbits.orbit_count();
  out << "incidence (facets of F_j tight on R_i)\n";
  write_matrix(out, a.incidence.counts, "R", "F", facets, &a.incidence.row_sums, "sum");
  out << "\nray adjacency (members of R_j adjacent to R_i; cut columns)\n";
  write_matrix(out, a.ray_adjacency.counts, "R", "R", kCutOrbitCount, &a.ray_adjacency.totals, "total");
  std::size_t non_cut_pairs = 0;
  for (std::size_t i = kCutOrbitCount; i < rays; ++i) {
    for (std::size_t j = kCutOrbitCount; j < rays; ++j) non_cut_pairs += a.ray_adjacency.counts[i][j] != 0;
  }
  out << "non-cut x non-cut adjacency: " << (non_cut_pairs == 0 ? "zero" : "NONZERO") << '\n';
  out << "\nfacet adjacency (members of F_j adjacent to F_i)\n";
  write_matrix(out, a.facet_adjacency.counts, "F", "F", facets, &a.facet_adjacency.totals, "total");
  out << "\ndouble counting: incidence " << yes_no(a.incidence.double_counting_ok) << ", rays "
      << yes_no(a.ray_adjacency.double_counting_ok) << ", facets " << yes_no(a.facet_adjacency.double_counting_ok)
      << '\n';
}

void write_diameters_text(std::ostream& out, const CensusReport& census, const DiameterReport& d) {
  const auto line = [&](const char* label, const OrbitTable& t, const std::string& prefix, const DiameterResult& r) {
    out << label << ": " << r.diameter << "  witness " << name(prefix, t.orbit_of(r.from)) << " "
        << to_string(t.member(r.from)) << " -- " << name(prefix, t.orbit_of(r.to)) << " " << to_string(t.member(r.to))
        << '\n';
  };
  line("skeleton diameter", census.ray_orbits, "R", d.skeleton);
  line("ridge diameter", census.facet_orbits, "F", d.ridge);
  line("cut subgraph diameter", census.ray_orbits, "R", d.cuts_only);
  out << "witness has disjoint cut neighborhoods: " << yes_no(d.skeleton_witness_ok) << '\n'
      << "local graphs of non-cut rays complete: " << yes_no(d.local_graphs_complete) << '\n';
}

void write_switching_text(std::ostream& out, const SwitchingClasses& s) {
  out << s.classes.size() << " switching classes\n";
  for (const auto& c : s.classes) {
    out << "  (" << c.size() << ")";
    for (std::size_t k : c) out << ' ' << name("O", k);
    out << '\n';
  }
  out << "tabulated labels reproduce rows: " << yes_no(s.labels_ok) << '\n';
}

void write_completeness_text(std::ostream& out, const CompletenessReport& c, int max_abs) {
  out << "b-vectors with |b_i| <= " << max_abs << ": " << c.candidates << " classes, " << c.valid << " valid, "
      << c.facets.size() << " facets\n";
  for (std::size_t k = 0; k < c.facets.size(); ++k) {
    const int orbit = c.matched_orbits[k];
    out << "  " << to_string(c.facets[k].values()) << "  "
        << (orbit < 0 ? std::string("unmatched") : name("F", static_cast<std::size_t>(orbit))) << '\n';
  }
  out << "exactly b^1..b^14: " << yes_no(c.complete) << '\n';
}

void write_mismatches_text(std::ostream& out, const std::vector<std::string>& mismatches) {
  if (mismatches.empty()) {
    out << "all claims hold\n";
    return;
  }
  out << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches) out << "  " << m << '\n';
}

void write_analysis_text(std::ostream& out, const Hyp7Analysis& a, const std::vector<std::string>& mismatches,
                         int max_abs) {
  const CensusReport& c = a.census;
  out << "HYP_7: " << c.hyp7.size() << " facets in " << c.facet_orbits.orbit_count() << " orbits, " << c.ray_count()
      << " extreme rays in " << c.ray_orbits.orbit_count() << " orbits\n\nfacet orbits\n";
  write_orbits_text(out, c.facet_orbits, "F");
  out << "\nray orbits\n";
  write_orbits_text(out, c.ray_orbits, "R");
  out << "\nsubcones\n";
  for (const SubconeResult& s : c.subcones) write_subcone_text(out, s);
  out << "\ncorrespondence O_i -> violating ray orbits\n";
  for (std::size_t i = 0; i < a.correspondence.violating_orbits.size(); ++i) {
    out << "  " << name("O", i) << " ->";
    for (std::size_t o : a.correspondence.violating_orbits[i]) out << ' ' << name("R", o);
    out << '\n';
  }
  out << "matches table pairing: " << yes_no(a.correspondence.bijection_matches_table) << "\n\n";
  write_tables_text(out, a);
  out << '\n';
  write_diameters_text(out, c, a.diameters);
  out << '\n';
  write_switching_text(out, a.switching);
  if (a.completeness) {
    out << '\n';
    write_completeness_text(out, *a.completeness, max_abs);
  }
  out << "\nsimplex facets as faces of a triangle and a CUT_7 facet\n";
  for (const FaceWitness& w : a.faces) {
    out << "  " << name("F", w.facet_orbit) << ":";
    for (std::size_t o : w.matching_cut7_orbits) out << ' ' << name("O", o);
    out << " (" << w.incident_cuts << " incident cuts)\n";
  }
  out << "\nseconds\n";
  for (const auto& [stage, s] : a.seconds) out << "  " << stage << ": " << std::fixed << std::setprecision(2) << s << '\n';
  out << std::defaultfloat << '\n';
  write_mismatches_text(out, mismatches);
}

}  // namespace hypercone
