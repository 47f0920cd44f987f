#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qcgeom/certify.hpp"
#include "qcgeom/cover.hpp"
#include "qcgeom/graph.hpp"
#include "qcgeom/nagata.hpp"
#include "qcgeom/stabilizer.hpp"

namespace qcgeom {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "qcgeom";
inline constexpr const char* kToolVersion = "0.1.0";

// 64-bit FNV-1a of the input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

Json to_json(const Distance& d);
Json graph_stats_json(const ConnectivityGraph& g, bool with_edges = false);
Json estimate_json(const AssouadEstimate& est);
Json decomposition_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);
Json certificate_json(const DecompositionCertificate& cert);
Json search_json(const NagataSearchResult& search);
Json distance_json(const DistanceResult& d);
Json bound_report_json(const BoundReport& report);

// Full certify document. Contains no wall-clock data, so identical inputs
// and seeds give byte-identical output.
Json certify_document(const StabilizerCode& code, std::string_view input_bytes, const CertifyOptions& options,
                      const CertifyOutcome& outcome);

// Common header: tool, version, seed, input digest and code summary.
Json document_header(const StabilizerCode& code, std::string_view input_bytes, std::uint64_t seed);

}  // namespace qcgeom
