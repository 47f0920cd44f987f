#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcgeom/graph.hpp"

namespace qcgeom {

enum class CoverMode { Exact, Greedy };

// Outer/inner radius pair (R, r) with 0 < r < R.
struct ScalePair {
  double outer = 0;
  double inner = 0;

  double ratio() const { return outer / inner; }
  friend bool operator==(const ScalePair&, const ScalePair&) = default;
};

// A cover of ball(center, outer) by balls of radius `inner` around `centers`.
struct CoverInstance {
  Vertex center = 0;
  double outer = 0;
  double inner = 0;
  std::vector<Vertex> centers;
  bool exact = false;          // count is the proven minimum
  std::size_t lower_bound = 0; // proven lower bound on the minimum

  std::size_t count() const { return centers.size(); }
  std::size_t gap() const { return count() - lower_bound; }
};

// Largest target for which exact mode runs branch-and-bound.
inline constexpr std::size_t kExactCoverLimit = 64;

// Covers ball(center, R) by r-balls whose centers range over all of V.
// Exact mode falls back to greedy (with exact = false and a lower bound)
// when the target has more than kExactCoverLimit vertices.
CoverInstance cover_ball(const ConnectivityGraph& g, Vertex center, double R, double r,
                         CoverMode mode = CoverMode::Exact);

std::size_t covering_number(const ConnectivityGraph& g, Vertex center, double R, double r,
                            CoverMode mode = CoverMode::Exact);

// Union of the cover balls contains ball(center, R).
bool covers(const ConnectivityGraph& g, const CoverInstance& cover);

struct PairCount {
  ScalePair scales;
  std::size_t count = 0;  // worst case over sampled centers
  Vertex worst_center = 0;
  bool exact = true;      // every contributing cover was solved exactly
};

struct AssouadEstimate {
  double beta = 0;      // fitted exponent
  double constant = 1;  // fitted C, at least 1
  double max_radius = 0;
  std::vector<PairCount> pairs;
  double residual = 0;  // max N / (C (R/r)^beta); <= 1 by construction
  std::vector<Vertex> centers;  // centers sampled
  std::string sampling;         // how centers were chosen
  std::uint64_t seed = 0;

  // Upper envelope evaluated at ratio R/r.
  double envelope(double ratio) const;
  bool includes_pair(const ScalePair& p) const;
};

inline constexpr std::size_t kAllCentersLimit = 512;
inline constexpr double kBetaStep = 0.01;

// Worst-case covering numbers for each pair, then the upper envelope
// N <= C (R/r)^beta. In log N vs log(R/r), beta is the slope of the upper
// hull edge leaving (0, 0) (a ball covers itself), rounded up to the 0.01
// grid; C is the smallest constant >= 1 keeping every pair under the
// envelope. Throws InsufficientData for fewer than three pairs.
AssouadEstimate assouad_fit(const ConnectivityGraph& g, double max_radius,
                            const std::vector<ScalePair>& schedule, std::uint64_t seed = 0);

// Fit only, from already computed counts.
void fit_envelope(AssouadEstimate& estimate);

}  // namespace qcgeom
