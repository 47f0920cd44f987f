#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcgeom/cover.hpp"
#include "qcgeom/graph.hpp"
#include "qcgeom/nagata.hpp"
#include "qcgeom/stabilizer.hpp"

namespace qcgeom {

// ---- Union Lemma ---------------------------------------------------------

struct UnionCertificate {
  VertexSet union_set;
  bool direct_check = false;  // is_correctable(union_set), recomputed
};

struct UnionViolation {
  enum class Kind { NotCorrectable, Separation, DirectCheckDisagrees };
  Kind kind = Kind::NotCorrectable;
  std::size_t set_index = 0;
  std::size_t other_index = 0;
  Edge edge{};  // boundary edge of set_index touching other_index
  std::optional<PauliOperator> logical;

  std::string describe() const;
};

struct UnionLemmaResult {
  std::optional<UnionCertificate> certificate;
  std::optional<UnionViolation> violation;

  bool certified() const { return certificate.has_value(); }
};

// Each U_i correctable and no boundary edge of U_i has an endpoint in U_j
// (i != j) => the union is correctable; confirmed by a direct check.
// Throws HypothesisViolation when some generator support is not a clique of g.
UnionLemmaResult union_lemma_check(const StabilizerCode& code, const ConnectivityGraph& g,
                                   const std::vector<VertexSet>& sets);

// ---- BPT counting --------------------------------------------------------

struct BptViolation {
  enum class Kind { NotCorrectable, BoundExceeded };
  Kind kind = Kind::NotCorrectable;
  std::size_t part = 0;  // 1 or 2 for NotCorrectable
  std::optional<PauliOperator> logical;
  std::size_t k = 0;
  std::size_t a3_size = 0;

  std::string describe() const;
};

struct BptResult {
  std::optional<std::size_t> k;  // set on success: k <= a3_size holds
  std::size_t a3_size = 0;
  std::optional<BptViolation> violation;

  bool certified() const { return k.has_value(); }
};

// A1, A2 correctable and A1 + A2 + A3 = V (disjoint) => k <= |A3|.
// Throws InputError when the three sets are not a partition of V.
BptResult bpt_bound_check(const StabilizerCode& code, const ConnectivityGraph& g, const VertexSet& a1,
                          const VertexSet& a2, const VertexSet& a3);

// ---- Distance bounds -----------------------------------------------------

enum class BoundKind { NagataBmax, AssouadFormula };

struct ProvenanceStep {
  std::string rule;
  std::string detail;
};

// Replays the contradiction argument of the Nagata bound on the actual code:
// blocks correctable -> collection unions correctable -> partition with
// A3 = {} forces k = 0. With k >= 1 some step has to fail.
struct ContradictionDiagnostic {
  enum class Step { BlockCorrectability, UnionLemma, BptCount, None };
  Step failed_step = Step::None;  // None: the chain completed (inconsistent)
  std::size_t collection = 0;
  std::size_t block = 0;
  std::string detail;
};

struct CrossCheck {
  enum class Verdict { Pass, Fail, Inconclusive };
  std::optional<std::size_t> distance;
  std::size_t weight_cap = 0;
  Verdict verdict = Verdict::Inconclusive;
};

struct BoundReport {
  std::size_t num_qubits = 0;
  std::size_t num_logicals = 0;
  Decomposition decomposition;
  DecompositionCertificate certificate;
  std::optional<AssouadEstimate> assouad;

  BoundKind kind = BoundKind::NagataBmax;
  std::size_t bound_value = 0;  // headline: smallest available bound

  std::size_t nagata_bound = 0;  // b_max(2c)
  std::optional<std::size_t> formula_bound;  // ceil(C (4c)^beta), when consistent
  double formula_value = 0;
  bool estimate_out_of_range = false;
  bool envelope_covers_2c = false;  // fit sampled (2c, r < 1)

  std::optional<CrossCheck> cross_check;
  ContradictionDiagnostic diagnostic;
  std::vector<ProvenanceStep> provenance;
};

// d <= b_max(2c) from a verified m <= 1 decomposition at scale >= 2.
// Throws HypothesisViolation for k = 0, scale < 2 or a graph in which some
// generator support is not a clique, InputError for an
// unverified decomposition.
BoundReport nagata_distance_bound(const StabilizerCode& code, const ConnectivityGraph& g,
                                  const Decomposition& decomposition,
                                  const std::optional<DistanceResult>& distance = std::nullopt);

// Adds d <= ceil(C (4c)^beta) when every radius-2c ball fits under the
// envelope; otherwise flags the estimate as out of range and withholds it.
BoundReport main_theorem_report(const StabilizerCode& code, const ConnectivityGraph& g,
                                const AssouadEstimate& assouad, const Decomposition& decomposition,
                                const std::optional<DistanceResult>& distance = std::nullopt);

// ---- End-to-end pipeline -------------------------------------------------

std::vector<ScalePair> default_schedule();

struct CertifyOptions {
  double scale = 2;
  double c_max = 4;
  std::vector<ScalePair> pairs = default_schedule();
  bool full = false;                 // brute-force cross-check
  std::size_t full_qubit_limit = 24; // skip brute force above this n
  std::uint64_t seed = 0;
};

enum class CertifyStatus { Certified, NoDecomposition, NoLogicalQubits, CrossCheckFailed };

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::NoDecomposition;
  ConnectivityGraph graph;
  NagataSearchResult search;
  std::optional<AssouadEstimate> assouad;
  std::optional<BoundReport> report;
  std::vector<std::string> notes;
};

// Graph -> Nagata search (m = 1) -> Assouad fit including (2c, 1/2) ->
// bound report, with a brute-force cross-check capped at the bound when
// options.full is set and n is small enough.
CertifyOutcome certify_code(const StabilizerCode& code, const CertifyOptions& options = {});

std::string to_string(BoundKind kind);
std::string to_string(ContradictionDiagnostic::Step step);
std::string to_string(CrossCheck::Verdict verdict);
std::string to_string(CertifyStatus status);

}  // namespace qcgeom
