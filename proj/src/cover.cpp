#include "qcgeom/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

void check_scales(double R, double r) {
  if (!(r > 0) || !(r < R)) {
    throw InputError("invalid scales: need 0 < r < R, got R=" + std::to_string(R) +
                     " r=" + std::to_string(r));
  }
}

// Candidate r-balls restricted to the target, one per distinct footprint.
struct Candidates {
  std::vector<Vertex> centers;
  std::vector<std::vector<std::size_t>> members;  // target indices
};

Candidates collect_candidates(const ConnectivityGraph& g, const VertexSet& target, double r) {
  Candidates out;
  std::map<std::vector<std::size_t>, Vertex> seen;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (g.distance(v, target[i]).within(r)) members.push_back(i);
    }
    if (members.empty()) continue;
    if (seen.emplace(members, v).second) {
      out.centers.push_back(v);
      out.members.push_back(std::move(members));
    }
  }
  return out;
}

std::vector<std::size_t> greedy_cover(const Candidates& cands, std::size_t target_size) {
  std::vector<bool> covered(target_size, false);
  std::size_t remaining = target_size;
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < cands.members.size(); ++c) {
      std::size_t gain = 0;
      for (auto i : cands.members[c]) gain += covered[i] ? 0 : 1;
      // Candidates are in increasing center order, so strict > keeps the smallest center.
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw std::logic_error("greedy cover stalled");
    for (auto i : cands.members[best]) {
      if (!covered[i]) {
        covered[i] = true;
        --remaining;
      }
    }
    chosen.push_back(best);
  }
  return chosen;
}

// Points of the target pairwise more than 2r apart need distinct r-balls.
std::size_t packing_lower_bound(const ConnectivityGraph& g, const VertexSet& target, double r) {
  const double reach = 2 * std::floor(r);
  std::vector<Vertex> packed;
  for (Vertex t : target) {
    const bool far = std::all_of(packed.begin(), packed.end(),
                                 [&](Vertex p) { return !g.distance(p, t).within(reach); });
    if (far) packed.push_back(t);
  }
  return packed.size();
}

class ExactCoverSolver {
 public:
  ExactCoverSolver(const Candidates& cands, std::size_t target_size) {
    // Drop candidates strictly contained in another.
    std::vector<std::uint64_t> masks;
    for (const auto& m : cands.members) {
      std::uint64_t mask = 0;
      for (auto i : m) mask |= std::uint64_t{1} << i;
      masks.push_back(mask);
    }
    for (std::size_t a = 0; a < masks.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < masks.size() && !dominated; ++b) {
        dominated = a != b && (masks[a] & ~masks[b]) == 0 && masks[a] != masks[b];
      }
      if (!dominated) {
        masks_.push_back(masks[a]);
        ids_.push_back(a);
      }
    }
    covering_.resize(target_size);
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      for (std::size_t i = 0; i < target_size; ++i) {
        if ((masks_[c] >> i) & 1u) covering_[i].push_back(c);
      }
    }
    full_ = target_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << target_size) - 1;
  }

  // Returns candidate ids (into the original list) of a minimum cover.
  std::vector<std::size_t> solve(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    dfs(full_);
    return best_;
  }

 private:
  void dfs(std::uint64_t uncovered) {
    if (uncovered == 0) {
      if (stack_.size() < best_.size()) {
        best_.clear();
        for (auto c : stack_) best_.push_back(ids_[c]);
      }
      return;
    }
    int widest = 0;
    for (auto m : masks_) widest = std::max(widest, std::popcount(m & uncovered));
    const std::size_t left = static_cast<std::size_t>(std::popcount(uncovered));
    const std::size_t bound = stack_.size() + (left + widest - 1) / widest;
    if (bound >= best_.size()) return;

    // Branch on the uncovered element with the fewest covering candidates.
    std::size_t pick = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t rest = uncovered; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (covering_[i].size() < fewest) {
        fewest = covering_[i].size();
        pick = i;
      }
    }
    std::vector<std::size_t> options = covering_[pick];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(masks_[a] & uncovered) > std::popcount(masks_[b] & uncovered);
    });
    for (auto c : options) {
      stack_.push_back(c);
      dfs(uncovered & ~masks_[c]);
      stack_.pop_back();
    }
  }

  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> ids_;
  std::vector<std::vector<std::size_t>> covering_;
  std::uint64_t full_ = 0;
  std::vector<std::size_t> stack_;
  std::vector<std::size_t> best_;
};

}  // namespace

CoverInstance cover_ball(const ConnectivityGraph& g, Vertex center, double R, double r,
                         CoverMode mode) {
  check_scales(R, r);
  const VertexSet target = ball(g, center, R);
  const Candidates cands = collect_candidates(g, target, r);

  std::vector<std::size_t> chosen = greedy_cover(cands, target.size());
  CoverInstance out{center, R, r, {}, false, 0};
  if (mode == CoverMode::Exact && target.size() <= kExactCoverLimit) {
    chosen = ExactCoverSolver(cands, target.size()).solve(std::move(chosen));
    out.exact = true;
  }
  for (auto c : chosen) out.centers.push_back(cands.centers[c]);
  std::sort(out.centers.begin(), out.centers.end());

  if (out.exact) {
    out.lower_bound = out.centers.size();
  } else {
    std::size_t widest = 1;
    for (const auto& m : cands.members) widest = std::max(widest, m.size());
    out.lower_bound = std::max((target.size() + widest - 1) / widest,
                               packing_lower_bound(g, target, r));
    out.lower_bound = std::min(out.lower_bound, out.centers.size());
    out.exact = out.lower_bound == out.centers.size();
  }
  return out;
}

std::size_t covering_number(const ConnectivityGraph& g, Vertex center, double R, double r,
                            CoverMode mode) {
  return cover_ball(g, center, R, r, mode).count();
}

bool covers(const ConnectivityGraph& g, const CoverInstance& cover) {
  for (Vertex t : ball(g, cover.center, cover.outer)) {
    const bool hit = std::any_of(cover.centers.begin(), cover.centers.end(), [&](Vertex c) {
      return g.distance(c, t).within(cover.inner);
    });
    if (!hit) return false;
  }
  return true;
}

double AssouadEstimate::envelope(double ratio) const { return constant * std::pow(ratio, beta); }

bool AssouadEstimate::includes_pair(const ScalePair& p) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const PairCount& pc) { return pc.scales == p; });
}

void fit_envelope(AssouadEstimate& est) {
  if (est.pairs.size() < 3) {
    throw InsufficientData("Assouad fit needs at least 3 scale pairs, got " +
                           std::to_string(est.pairs.size()));
  }
  // Smallest grid slope whose line from (R/r = 1, N = 1) stays above every
  // sampled point, i.e. the first upper-hull edge leaving the origin.
  double steepest = 0;
  for (const auto& pc : est.pairs) {
    steepest = std::max(steepest, std::log(static_cast<double>(pc.count)) / std::log(pc.scales.ratio()));
  }
  const double best_beta = std::ceil(steepest / kBetaStep - 1e-9) * kBetaStep;
  est.beta = best_beta;
  est.constant = 1;
  for (const auto& pc : est.pairs) {
    est.constant = std::max(est.constant, static_cast<double>(pc.count) /
                                              std::pow(pc.scales.ratio(), est.beta));
  }
  est.residual = 0;
  for (const auto& pc : est.pairs) {
    est.residual = std::max(est.residual, static_cast<double>(pc.count) / est.envelope(pc.scales.ratio()));
  }
}

AssouadEstimate assouad_fit(const ConnectivityGraph& g, double max_radius,
                            const std::vector<ScalePair>& schedule, std::uint64_t seed) {
  if (schedule.size() < 3) {
    throw InsufficientData("Assouad fit needs at least 3 scale pairs, got " +
                           std::to_string(schedule.size()));
  }
  for (const auto& p : schedule) {
    check_scales(p.outer, p.inner);
    if (p.outer > max_radius) {
      throw InputError("scale pair R=" + std::to_string(p.outer) + " exceeds R_max=" +
                       std::to_string(max_radius));
    }
  }
  if (g.num_vertices() == 0) throw InputError("empty graph");

  AssouadEstimate est;
  est.max_radius = max_radius;
  est.seed = seed;
  const std::size_t n = g.num_vertices();
  if (n <= kAllCentersLimit) {
    for (Vertex v = 0; v < n; ++v) est.centers.push_back(v);
    est.sampling = "all";
  } else {
    const std::size_t stride = n / kAllCentersLimit;
    const std::size_t offset = static_cast<std::size_t>(seed % stride);
    for (std::size_t i = 0; i < kAllCentersLimit; ++i) est.centers.push_back(offset + i * stride);
    est.sampling = "strided:stride=" + std::to_string(stride) + ",offset=" + std::to_string(offset);
  }

  for (const auto& p : schedule) {
    PairCount pc{p, 0, 0, true};
    for (Vertex c : est.centers) {
      const CoverInstance cover = cover_ball(g, c, p.outer, p.inner, CoverMode::Exact);
      pc.exact = pc.exact && cover.exact;
      if (cover.count() > pc.count) {
        pc.count = cover.count();
        pc.worst_center = c;
      }
    }
    est.pairs.push_back(pc);
  }
  fit_envelope(est);
  return est;
}

}  // namespace qcgeom
