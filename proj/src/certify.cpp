#include "qcgeom/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

constexpr double kRelSlack = 1e-9;

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

ErasureSet as_erasure(const VertexSet& s) { return ErasureSet(std::vector<std::size_t>(s.begin(), s.end())); }

// Every generator support must be a clique of g (g contains the connectivity graph).
void require_local(const StabilizerCode& code, const ConnectivityGraph& g) {
  if (g.num_vertices() != code.num_qubits()) throw DimensionMismatch("graph and code sizes differ");
  for (std::size_t i = 0; i < code.generators().size(); ++i) {
    const auto support = code.generators()[i].support();
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        if (!g.has_edge(support[a], support[b])) {
          throw HypothesisViolation("generator " + std::to_string(i) + " acts on qubits " +
                                    std::to_string(support[a]) + " and " + std::to_string(support[b]) +
                                    ", which are not adjacent in the graph");
        }
      }
    }
  }
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CrossCheck make_cross_check(const DistanceResult& d, std::size_t bound) {
  CrossCheck cc;
  cc.distance = d.distance;
  cc.weight_cap = d.weight_cap;
  if (d.distance) {
    cc.verdict = *d.distance <= bound ? CrossCheck::Verdict::Pass : CrossCheck::Verdict::Fail;
  } else {
    cc.verdict = d.weight_cap >= bound ? CrossCheck::Verdict::Fail : CrossCheck::Verdict::Inconclusive;
  }
  return cc;
}

ContradictionDiagnostic run_contradiction_chain(const StabilizerCode& code, const ConnectivityGraph& g,
                                                const Decomposition& d) {
  ContradictionDiagnostic diag;
  for (std::size_t ci = 0; ci < d.collections.size(); ++ci) {
    for (std::size_t bi = 0; bi < d.collections[ci].size(); ++bi) {
      const auto& block = d.collections[ci][bi];
      if (auto logical = logical_supported_on(code, as_erasure(block))) {
        diag.failed_step = ContradictionDiagnostic::Step::BlockCorrectability;
        diag.collection = ci;
        diag.block = bi;
        diag.detail = "block " + set_string(block) + " supports logical " + logical->to_string();
        return diag;
      }
    }
  }
  for (std::size_t ci = 0; ci < d.collections.size(); ++ci) {
    if (d.collections[ci].empty()) continue;
    const auto u = union_lemma_check(code, g, d.collections[ci]);
    if (!u.certified()) {
      diag.failed_step = ContradictionDiagnostic::Step::UnionLemma;
      diag.collection = ci;
      diag.detail = u.violation->describe();
      return diag;
    }
  }
  const VertexSet a1 = d.collections.empty() ? VertexSet{} : d.collection_union(0);
  const VertexSet a2 = d.collections.size() < 2 ? VertexSet{} : set_minus(d.collection_union(1), a1);
  const auto bpt = bpt_bound_check(code, g, a1, a2, {});
  if (!bpt.certified()) {
    diag.failed_step = ContradictionDiagnostic::Step::BptCount;
    diag.detail = bpt.violation->describe();
    return diag;
  }
  diag.detail = "all steps certified; k <= 0 contradicts k >= 1";
  return diag;
}

}  // namespace

std::string UnionViolation::describe() const {
  switch (kind) {
    case Kind::NotCorrectable:
      return "set " + std::to_string(set_index) + " is not correctable" +
             (logical ? " (logical " + logical->to_string() + ")" : "");
    case Kind::Separation:
      return "boundary edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
             ") of set " + std::to_string(set_index) + " touches set " + std::to_string(other_index);
    case Kind::DirectCheckDisagrees:
      return "union certified by the lemma but the direct check finds it non-correctable";
  }
  return "unknown violation";
}

std::string BptViolation::describe() const {
  switch (kind) {
    case Kind::NotCorrectable:
      return "A" + std::to_string(part) + " is not correctable" +
             (logical ? " (logical " + logical->to_string() + ")" : "");
    case Kind::BoundExceeded:
      return "internal consistency failure: k=" + std::to_string(k) + " > |A3|=" + std::to_string(a3_size);
  }
  return "unknown violation";
}

UnionLemmaResult union_lemma_check(const StabilizerCode& code, const ConnectivityGraph& g,
                                   const std::vector<VertexSet>& sets) {
  if (sets.empty()) throw InputError("union_lemma_check needs at least one set");
  require_local(code, g);
  UnionLemmaResult result;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (auto logical = logical_supported_on(code, as_erasure(sets[i]))) {
      result.violation = UnionViolation{UnionViolation::Kind::NotCorrectable, i, i, {}, logical};
      return result;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto edges = boundary(g, sets[i]);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      for (const auto& e : edges) {
        const bool touches = std::binary_search(sets[j].begin(), sets[j].end(), e.first) ||
                             std::binary_search(sets[j].begin(), sets[j].end(), e.second);
        if (touches) {
          result.violation = UnionViolation{UnionViolation::Kind::Separation, i, j, e, std::nullopt};
          return result;
        }
      }
    }
  }
  VertexSet all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  all = normalize(std::move(all));
  if (!is_correctable(code, as_erasure(all))) {
    result.violation = UnionViolation{UnionViolation::Kind::DirectCheckDisagrees, 0, 0, {},
                                      logical_supported_on(code, as_erasure(all))};
    return result;
  }
  result.certificate = UnionCertificate{std::move(all), true};
  return result;
}

BptResult bpt_bound_check(const StabilizerCode& code, const ConnectivityGraph& g, const VertexSet& a1,
                          const VertexSet& a2, const VertexSet& a3) {
  const std::size_t n = g.num_vertices();
  if (n != code.num_qubits()) throw DimensionMismatch("graph and code sizes differ");
  std::vector<int> hits(n, 0);
  for (const VertexSet* part : {&a1, &a2, &a3}) {
    for (Vertex v : *part) {
      if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
      ++hits[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      throw InputError("A1, A2, A3 must partition V; vertex " + std::to_string(v) + " appears " +
                       std::to_string(hits[v]) + " times");
    }
  }

  BptResult result;
  result.a3_size = a3.size();
  std::size_t part = 1;
  for (const VertexSet* a : {&a1, &a2}) {
    if (auto logical = logical_supported_on(code, as_erasure(*a))) {
      BptViolation v;
      v.part = part;
      v.logical = logical;
      result.violation = v;
      return result;
    }
    ++part;
  }
  const std::size_t k = logical_count(code);
  if (k > a3.size()) {
    BptViolation v;
    v.kind = BptViolation::Kind::BoundExceeded;
    v.k = k;
    v.a3_size = a3.size();
    result.violation = v;
    return result;
  }
  result.k = k;
  return result;
}

BoundReport nagata_distance_bound(const StabilizerCode& code, const ConnectivityGraph& g,
                                  const Decomposition& decomposition,
                                  const std::optional<DistanceResult>& distance) {
  if (code.num_logicals() == 0) {
    throw HypothesisViolation("distance bound needs k >= 1; code has k = 0");
  }
  if (decomposition.dimension > 1) {
    throw HypothesisViolation("distance bound needs a decomposition with m <= 1");
  }
  if (!(decomposition.scale >= 2)) {
    throw HypothesisViolation("distance bound needs scale r >= 2");
  }
  require_local(code, g);
  const auto verdict = verify_decomposition(g, decomposition);
  if (!verdict.valid()) {
    throw InputError("unverified decomposition rejected: " + verdict.violation->describe());
  }

  BoundReport report;
  report.num_qubits = code.num_qubits();
  report.num_logicals = code.num_logicals();
  report.decomposition = decomposition;
  report.certificate = *verdict.certificate;
  const double radius = 2 * decomposition.constant;
  report.nagata_bound = b_max(g, radius);
  report.bound_value = report.nagata_bound;
  report.kind = BoundKind::NagataBmax;

  report.provenance.push_back(
      {"nagata-decomposition",
       "verified m=" + std::to_string(decomposition.dimension) + " r=" + format_number(decomposition.scale) +
           " c=" + format_number(decomposition.constant) + " blocks=" +
           std::to_string(decomposition.num_blocks())});
  report.provenance.push_back({"nagata-distance-lemma", "d <= b_max(2c) = b_max(" + format_number(radius) +
                                                            ") = " + std::to_string(report.nagata_bound)});

  report.diagnostic = run_contradiction_chain(code, g, decomposition);
  report.provenance.push_back({"contradiction-chain", to_string(report.diagnostic.failed_step) + ": " +
                                                          report.diagnostic.detail});
  if (distance) {
    report.cross_check = make_cross_check(*distance, report.bound_value);
    report.provenance.push_back({"brute-force-cross-check", to_string(report.cross_check->verdict)});
  }
  return report;
}

BoundReport main_theorem_report(const StabilizerCode& code, const ConnectivityGraph& g,
                                const AssouadEstimate& assouad, const Decomposition& decomposition,
                                const std::optional<DistanceResult>& distance) {
  BoundReport report = nagata_distance_bound(code, g, decomposition);
  report.assouad = assouad;

  const double c = decomposition.constant;
  const double radius = 2 * c;
  report.envelope_covers_2c = std::any_of(assouad.pairs.begin(), assouad.pairs.end(), [&](const PairCount& p) {
    return p.scales.outer == radius && p.scales.inner < 1;
  });
  report.formula_value = assouad.envelope(4 * c);
  report.provenance.push_back(
      {"assouad-envelope", "N(R,r) <= C (R/r)^beta with beta=" + format_number(assouad.beta) +
                               " C=" + format_number(assouad.constant) + " over " +
                               std::to_string(assouad.pairs.size()) + " sampled pairs"});

  // Radius-1/2 balls are single vertices, so the envelope at (2c, 1/2)
  // bounds every radius-2c ball by C (4c)^beta.
  if (static_cast<double>(report.nagata_bound) <= report.formula_value * (1 + kRelSlack)) {
    report.formula_bound = static_cast<std::size_t>(std::ceil(report.formula_value * (1 - kRelSlack)));
    report.provenance.push_back(
        {"assouad-formula", "b_max(" + format_number(radius) + ")=" + std::to_string(report.nagata_bound) +
                                " <= C (4c)^beta = " + format_number(report.formula_value) + "; d <= " +
                                std::to_string(*report.formula_bound)});
    if (*report.formula_bound < report.nagata_bound) {
      report.kind = BoundKind::AssouadFormula;
      report.bound_value = *report.formula_bound;
    }
  } else {
    report.estimate_out_of_range = true;
    report.provenance.push_back(
        {"assouad-formula", "withheld: estimate out of range, b_max(" + format_number(radius) +
                                ")=" + std::to_string(report.nagata_bound) + " exceeds C (4c)^beta = " +
                                format_number(report.formula_value)});
  }

  if (distance) {
    report.cross_check = make_cross_check(*distance, report.bound_value);
    if (report.formula_bound && report.cross_check->distance &&
        *report.cross_check->distance > *report.formula_bound) {
      report.cross_check->verdict = CrossCheck::Verdict::Fail;
    }
    report.provenance.push_back({"brute-force-cross-check", to_string(report.cross_check->verdict)});
  }
  return report;
}

std::vector<ScalePair> default_schedule() {
  return {{2, 1}, {4, 1}, {4, 2}, {6, 2}, {8, 2}, {8, 4}};
}

CertifyOutcome certify_code(const StabilizerCode& code, const CertifyOptions& options) {
  CertifyOutcome out;
  out.graph = build_connectivity_graph(code);
  out.search = find_nagata_decomposition(out.graph, 1, options.scale, options.c_max);

  std::vector<ScalePair> schedule = options.pairs;
  if (out.search.found()) {
    const ScalePair single_vertex{2 * out.search.decomposition->constant, 0.5};
    if (std::find(schedule.begin(), schedule.end(), single_vertex) == schedule.end()) {
      schedule.push_back(single_vertex);
    }
  }
  double max_radius = 0;
  for (const auto& p : schedule) max_radius = std::max(max_radius, p.outer);
  out.assouad = assouad_fit(out.graph, max_radius, schedule, options.seed);

  if (code.num_logicals() == 0) {
    out.status = CertifyStatus::NoLogicalQubits;
    out.notes.push_back("k = 0: distance bounds need at least one logical qubit");
    return out;
  }
  if (!out.search.found()) {
    out.status = CertifyStatus::NoDecomposition;
    out.notes.push_back("Nagata decomposition not found (heuristic)");
    return out;
  }

  out.report = main_theorem_report(code, out.graph, *out.assouad, *out.search.decomposition);
  out.status = CertifyStatus::Certified;
  if (options.full) {
    if (code.num_qubits() <= options.full_qubit_limit) {
      const auto d = min_distance(code, out.report->bound_value);
      out.report->cross_check = make_cross_check(d, out.report->bound_value);
      out.report->provenance.push_back({"brute-force-cross-check", to_string(out.report->cross_check->verdict)});
      if (out.report->cross_check->verdict == CrossCheck::Verdict::Fail) {
        out.status = CertifyStatus::CrossCheckFailed;
      }
    } else {
      out.notes.push_back("brute-force cross-check skipped: n=" + std::to_string(code.num_qubits()) +
                          " exceeds limit " + std::to_string(options.full_qubit_limit));
    }
  }
  return out;
}

std::string to_string(BoundKind kind) {
  return kind == BoundKind::NagataBmax ? "nagata_bmax" : "assouad_formula";
}

std::string to_string(ContradictionDiagnostic::Step step) {
  switch (step) {
    case ContradictionDiagnostic::Step::BlockCorrectability: return "block_correctability";
    case ContradictionDiagnostic::Step::UnionLemma: return "union_lemma";
    case ContradictionDiagnostic::Step::BptCount: return "bpt_count";
    case ContradictionDiagnostic::Step::None: return "none";
  }
  return "unknown";
}

std::string to_string(CrossCheck::Verdict verdict) {
  switch (verdict) {
    case CrossCheck::Verdict::Pass: return "pass";
    case CrossCheck::Verdict::Fail: return "fail";
    case CrossCheck::Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(CertifyStatus status) {
  switch (status) {
    case CertifyStatus::Certified: return "certified";
    case CertifyStatus::NoDecomposition: return "not found (heuristic)";
    case CertifyStatus::NoLogicalQubits: return "no logical qubits";
    case CertifyStatus::CrossCheckFailed: return "cross-check failed";
  }
  return "unknown";
}

}  // namespace qcgeom
