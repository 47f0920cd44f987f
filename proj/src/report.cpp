#include "qcgeom/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qcgeom {

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json to_json(const Distance& d) {
  if (d.is_finite()) return d.value();
  return "inf";
}

Json graph_stats_json(const ConnectivityGraph& g, bool with_edges) {
  Json j;
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["max_degree"] = g.max_degree();
  const Distance diam = g.diameter();
  j["diameter"] = to_json(diam);
  j["connected"] = diam.is_finite();
  Json table = Json::array();
  std::size_t top = 8;
  if (diam.is_finite()) top = std::min<std::size_t>(top, diam.value());
  for (std::size_t r = 0; r <= top; ++r) {
    table.push_back({{"r", r}, {"b_max", b_max(g, static_cast<double>(r))}});
  }
  j["b_max"] = table;
  if (with_edges) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edge_list"] = edges;
  }
  return j;
}

Json estimate_json(const AssouadEstimate& est) {
  Json j;
  j["beta_hat"] = est.beta;
  j["C_hat"] = est.constant;
  j["residual"] = est.residual;
  j["R_max"] = est.max_radius;
  Json pairs = Json::array();
  for (const auto& p : est.pairs) {
    pairs.push_back({{"R", p.scales.outer},
                     {"r", p.scales.inner},
                     {"N", p.count},
                     {"worst_center", p.worst_center},
                     {"exact", p.exact}});
  }
  j["pairs"] = pairs;
  j["center_sampling"] = est.sampling;
  j["centers_sampled"] = est.centers.size();
  j["seed"] = est.seed;
  j["note"] = "dimension at the sampled scales only";
  return j;
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["m"] = d.dimension;
  j["r"] = d.scale;
  j["c"] = d.constant;
  j["collections"] = d.collections;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.dimension = j.at("m").get<std::size_t>();
  d.scale = j.at("r").get<double>();
  d.constant = j.at("c").get<double>();
  d.collections = j.at("collections").get<std::vector<Collection>>();
  return d;
}

Json certificate_json(const DecompositionCertificate& cert) {
  Json j;
  j["vertices"] = cert.num_vertices;
  j["blocks"] = cert.num_blocks;
  j["min_separation"] = to_json(cert.min_separation);
  j["max_block_diameter"] = to_json(cert.max_block_diameter);
  j["checks"] = cert.checks;
  return j;
}

Json search_json(const NagataSearchResult& search) {
  Json j;
  j["status"] = search.found() ? "found" : "not found (heuristic)";
  Json attempts = Json::array();
  for (const auto& a : search.attempts) {
    Json aj{{"c", a.constant},
            {"carve_radius", a.carve_radius},
            {"clusters", a.clusters},
            {"conflict_edges", a.conflict_edges},
            {"success", a.success}};
    if (!a.odd_cycle.empty()) aj["odd_cycle_centers"] = a.odd_cycle;
    if (!a.note.empty()) aj["note"] = a.note;
    attempts.push_back(std::move(aj));
  }
  j["attempts"] = attempts;
  if (search.found()) {
    j["decomposition"] = decomposition_json(*search.decomposition);
    j["certificate"] = certificate_json(*search.certificate);
  }
  return j;
}

Json distance_json(const DistanceResult& d) {
  Json j;
  if (d.distance) {
    j["distance"] = *d.distance;
  } else {
    j["distance"] = "exceeds cap";
  }
  j["weight_cap"] = d.weight_cap;
  j["sets_checked"] = d.sets_checked;
  if (d.distance) {
    j["witness_set"] = d.witness_set.qubits();
    if (d.witness_logical) j["witness_logical"] = d.witness_logical->to_string();
  }
  return j;
}

Json bound_report_json(const BoundReport& report) {
  Json j;
  j["bound_kind"] = to_string(report.kind);
  j["bound_value"] = report.bound_value;
  j["nagata_bmax"] = report.nagata_bound;
  if (report.formula_bound) {
    j["assouad_formula"] = *report.formula_bound;
  } else {
    j["assouad_formula"] = nullptr;
  }
  j["formula_value"] = report.formula_value;
  j["estimate_out_of_range"] = report.estimate_out_of_range;
  j["envelope_covers_2c"] = report.envelope_covers_2c;
  j["contradiction_chain"] = {{"failed_step", to_string(report.diagnostic.failed_step)},
                              {"detail", report.diagnostic.detail}};
  Json prov = Json::array();
  for (const auto& step : report.provenance) prov.push_back({{"rule", step.rule}, {"detail", step.detail}});
  j["provenance"] = prov;
  return j;
}

Json document_header(const StabilizerCode& code, std::string_view input_bytes, std::uint64_t seed) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  j["input"] = {{"digest", input_digest(input_bytes)},
                {"n", code.num_qubits()},
                {"generators", code.generators().size()},
                {"rank", code.rank()},
                {"k", code.num_logicals()}};
  return j;
}

Json certify_document(const StabilizerCode& code, std::string_view input_bytes, const CertifyOptions& options,
                      const CertifyOutcome& outcome) {
  Json j = document_header(code, input_bytes, options.seed);
  j["status"] = to_string(outcome.status);
  j["options"] = {{"r", options.scale}, {"c_max", options.c_max}, {"full", options.full}};
  j["graph"] = graph_stats_json(outcome.graph);
  j["assouad"] = outcome.assouad ? estimate_json(*outcome.assouad) : Json(nullptr);
  j["decomposition"] = search_json(outcome.search);
  j["bound"] = outcome.report ? bound_report_json(*outcome.report) : Json(nullptr);
  if (outcome.report && outcome.report->cross_check) {
    const auto& cc = *outcome.report->cross_check;
    Json cj;
    if (cc.distance) {
      cj["distance"] = *cc.distance;
    } else {
      cj["distance"] = "exceeds cap";
    }
    cj["weight_cap"] = cc.weight_cap;
    cj["verdict"] = to_string(cc.verdict);
    j["cross_check"] = cj;
  } else {
    j["cross_check"] = nullptr;
  }
  j["notes"] = outcome.notes;
  return j;
}

}  // namespace qcgeom
