#pragma once

// JSON and text renderings of pipeline results. JSON objects use sorted keys
// (nlohmann::json is map-backed); the layout is described in
// docs/report-schema.md.

#include "hypercone/cone_io.hpp"
#include "hypercone/pipeline.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercone {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::json;

/// Top-level object with `schema_version` and `report` set.
Json report_envelope(const std::string& kind);

Json vector_json(const IntVector& v);
/// Orbit list of a table; `prefix` names orbits prefix_1, prefix_2, ...
Json orbit_table_json(const OrbitTable& t, const std::string& prefix);
Json cone_json(const Cone& c);
Json subcone_json(const SubconeResult& s);
Json incidence_json(const IncidenceTable& t);
Json adjacency_json(const AdjacencyTable& t, const std::string& prefix);
Json diameters_json(const CensusReport& census, const DiameterReport& d);
Json correspondence_json(const Correspondence& c);
Json switching_json(const SwitchingClasses& s);
Json completeness_json(const CompletenessReport& c, int max_abs);
Json faces_json(const std::vector<FaceWitness>& faces);
/// Full census report.
Json analysis_json(const Hyp7Analysis& a, const std::vector<std::string>& mismatches, int max_abs);

void write_orbits_text(std::ostream& out, const OrbitTable& t, const std::string& prefix);
void write_subcone_text(std::ostream& out, const SubconeResult& s);
void write_tables_text(std::ostream& out, const Hyp7Analysis& a);
void write_diameters_text(std::ostream& out, const CensusReport& census, const DiameterReport& d);
void write_switching_text(std::ostream& out, const SwitchingClasses& s);
void write_completeness_text(std::ostream& out, const CompletenessReport& c, int max_abs);
void write_analysis_text(std::ostream& out, const Hyp7Analysis& a, const std::vector<std::string>& mismatches,
                         int max_abs);
void write_mismatches_text(std::ostream& out, const std::vector<std::string>& mismatches);

}  // namespace hypercone
