#include "qcgeom/nagata.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

constexpr double kSlack = 1e-9;

DecompositionViolation violation(DecompositionViolation::Kind kind, std::size_t collection = 0,
                                 std::size_t block = 0) {
  DecompositionViolation v;
  v.kind = kind;
  v.collection = collection;
  v.block = block;
  return v;
}

bool under_separated(Distance d, double r) { return d.is_finite() && static_cast<double>(d.value()) < r; }

struct Carving {
  std::vector<VertexSet> clusters;
  std::vector<Vertex> centers;
  std::vector<std::size_t> owner;  // cluster index per vertex
};

Carving carve(const ConnectivityGraph& g, std::size_t radius) {
  const std::size_t n = g.num_vertices();
  Carving out;
  out.owner.assign(n, n);
  std::vector<Distance> to_centers(n, Distance::infinite());
  std::size_t assigned = 0;
  Vertex center = 0;
  while (assigned < n) {
    VertexSet cluster;
    for (Vertex v = 0; v < n; ++v) {
      if (out.owner[v] == n && g.distance(center, v).within(static_cast<double>(radius))) {
        out.owner[v] = out.clusters.size();
        cluster.push_back(v);
      }
    }
    assigned += cluster.size();
    out.clusters.push_back(std::move(cluster));
    out.centers.push_back(center);
    // Next center: unassigned vertex farthest from all centers so far.
    std::optional<Vertex> next;
    for (Vertex v = 0; v < n; ++v) {
      to_centers[v] = std::min(to_centers[v], g.distance(center, v));
      if (out.owner[v] == n && (!next || to_centers[v] > to_centers[*next])) next = v;
    }
    if (next) center = *next;
  }
  return out;
}

using ConflictGraph = std::vector<std::vector<std::size_t>>;

ConflictGraph conflict_graph(const ConnectivityGraph& g, const Carving& carving, double r,
                             std::size_t& edge_count) {
  const std::size_t k = carving.clusters.size();
  std::vector<std::vector<bool>> linked(k, std::vector<bool>(k, false));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      const std::size_t a = carving.owner[u];
      const std::size_t b = carving.owner[v];
      if (a != b && under_separated(g.distance(u, v), r)) {
        linked[a][b] = true;
        linked[b][a] = true;
      }
    }
  }
  ConflictGraph adj(k);
  edge_count = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (linked[a][b]) adj[a].push_back(b);
    }
    edge_count += adj[a].size();
  }
  edge_count /= 2;
  return adj;
}

// BFS 2-coloring; on failure fills `odd_cycle` with cluster indices.
std::optional<std::vector<std::size_t>> two_color(const ConflictGraph& adj,
                                                  std::vector<std::size_t>& odd_cycle) {
  const std::size_t k = adj.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(k, kNone);
  std::vector<std::size_t> parent(k, kNone);
  std::vector<std::size_t> depth(k, 0);
  for (std::size_t root = 0; root < k; ++root) {
    if (color[root] != kNone) continue;
    color[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b : adj[a]) {
        if (color[b] == kNone) {
          color[b] = 1 - color[a];
          parent[b] = a;
          depth[b] = depth[a] + 1;
          queue.push_back(b);
        } else if (color[b] == color[a]) {
          // Walk both ends up to their common ancestor.
          std::vector<std::size_t> left{a};
          std::vector<std::size_t> right{b};
          std::size_t x = a;
          std::size_t y = b;
          while (depth[x] > depth[y]) left.push_back(x = parent[x]);
          while (depth[y] > depth[x]) right.push_back(y = parent[y]);
          while (x != y) {
            left.push_back(x = parent[x]);
            right.push_back(y = parent[y]);
          }
          right.pop_back();
          odd_cycle = left;
          odd_cycle.insert(odd_cycle.end(), right.rbegin(), right.rend());
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<std::size_t> dsatur(const ConflictGraph& adj) {
  const std::size_t k = adj.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(k, kNone);
  std::vector<std::vector<bool>> seen(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = kNone;
    std::size_t pick_sat = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (color[a] != kNone) continue;
      const auto sat = static_cast<std::size_t>(std::count(seen[a].begin(), seen[a].end(), true));
      if (pick == kNone || sat > pick_sat || (sat == pick_sat && adj[a].size() > adj[pick].size())) {
        pick = a;
        pick_sat = sat;
      }
    }
    std::size_t c = 0;
    while (c < seen[pick].size() && seen[pick][c]) ++c;
    color[pick] = c;
    for (std::size_t b : adj[pick]) {
      if (seen[b].size() <= c) seen[b].resize(c + 1, false);
      seen[b][c] = true;
    }
  }
  return color;
}

std::optional<std::vector<std::size_t>> exact_coloring(const ConflictGraph& adj, std::size_t colors) {
  const std::size_t k = adj.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(k, kNone);
  std::function<bool(std::size_t)> place = [&](std::size_t a) {
    if (a == k) return true;
    // Colors beyond the first unused one are symmetric.
    std::size_t used = 0;
    for (std::size_t b = 0; b < a; ++b) used = std::max(used, color[b] + 1);
    for (std::size_t c = 0; c < std::min(colors, used + 1); ++c) {
      const bool clash = std::any_of(adj[a].begin(), adj[a].end(),
                                     [&](std::size_t b) { return color[b] == c; });
      if (clash) continue;
      color[a] = c;
      if (place(a + 1)) return true;
      color[a] = kNone;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return color;
}

}  // namespace

std::size_t Decomposition::num_blocks() const {
  std::size_t total = 0;
  for (const auto& c : collections) total += c.size();
  return total;
}

VertexSet Decomposition::collection_union(std::size_t i) const {
  VertexSet out;
  for (const auto& block : collections.at(i)) out.insert(out.end(), block.begin(), block.end());
  return normalize(std::move(out));
}

std::string DecompositionViolation::describe() const {
  const std::string where =
      "collection " + std::to_string(collection) + " block " + std::to_string(block);
  switch (kind) {
    case Kind::CollectionCount:
      return "expected m+1 collections";
    case Kind::VertexOutOfRange:
      return where + " contains out-of-range vertex " + std::to_string(vertex);
    case Kind::EmptyBlock:
      return where + " is empty";
    case Kind::Uncovered:
      return "vertex " + std::to_string(vertex) + " is not covered";
    case Kind::UnderSeparated:
      return where + " and block " + std::to_string(other_block) + " are at distance " +
             distance.to_string();
    case Kind::Oversized:
      return where + " has diameter " + distance.to_string() + " (vertices " +
             std::to_string(vertex) + ", " + std::to_string(other_vertex) + ")";
  }
  return "unknown violation";
}

VerifyResult verify_decomposition(const ConnectivityGraph& g, const Decomposition& d) {
  using Kind = DecompositionViolation::Kind;
  VerifyResult result;
  auto fail = [&](DecompositionViolation v) {
    result.violation = v;
    return result;
  };
  if (d.collections.size() != d.dimension + 1) {
    return fail(violation(Kind::CollectionCount, d.collections.size()));
  }

  const std::size_t n = g.num_vertices();
  std::vector<bool> covered(n, false);
  for (std::size_t ci = 0; ci < d.collections.size(); ++ci) {
    for (std::size_t bi = 0; bi < d.collections[ci].size(); ++bi) {
      const auto& block = d.collections[ci][bi];
      if (block.empty()) return fail(violation(Kind::EmptyBlock, ci, bi));
      for (Vertex v : block) {
        if (v >= n) {
          auto bad = violation(Kind::VertexOutOfRange, ci, bi);
          bad.vertex = v;
          return fail(bad);
        }
        covered[v] = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) {
      auto bad = violation(Kind::Uncovered);
      bad.vertex = v;
      return fail(bad);
    }
  }

  DecompositionCertificate cert;
  cert.num_vertices = n;
  cert.num_blocks = d.num_blocks();
  for (std::size_t ci = 0; ci < d.collections.size(); ++ci) {
    const auto& coll = d.collections[ci];
    for (std::size_t a = 0; a < coll.size(); ++a) {
      for (std::size_t b = a + 1; b < coll.size(); ++b) {
        const Distance sd = set_distance(g, coll[a], coll[b]);
        cert.min_separation = std::min(cert.min_separation, sd);
        if (under_separated(sd, d.scale)) {
          auto bad = violation(Kind::UnderSeparated, ci, a);
          bad.other_block = b;
          bad.distance = sd;
          return fail(bad);
        }
      }
    }
  }

  const double limit = d.bound_diameter();
  for (std::size_t ci = 0; ci < d.collections.size(); ++ci) {
    for (std::size_t bi = 0; bi < d.collections[ci].size(); ++bi) {
      const auto& block = d.collections[ci][bi];
      for (Vertex u : block) {
        for (Vertex v : block) {
          const Distance dist = g.distance(u, v);
          cert.max_block_diameter = std::max(cert.max_block_diameter, dist);
          if (!dist.within(limit + kSlack)) {
            auto bad = violation(Kind::Oversized, ci, bi);
            bad.vertex = u;
            bad.other_vertex = v;
            bad.distance = dist;
            return fail(bad);
          }
        }
      }
    }
  }

  cert.checks = {
      "cover: every vertex lies in some block",
      "separation: same-collection blocks at distance >= r",
      "bounded: every block has diameter <= c*r",
  };
  result.certificate = std::move(cert);
  return result;
}

NagataSearchResult find_nagata_decomposition(const ConnectivityGraph& g, std::size_t m, double r,
                                             double c_max, const NagataSearchOptions& options) {
  if (!(r >= 2)) throw InputError("Nagata search needs scale r >= 2");
  if (!(options.c_min > 0) || !(c_max >= options.c_min)) {
    throw InputError("Nagata search needs 0 < c_min <= c_max");
  }
  if (g.num_vertices() == 0) throw InputError("empty graph");

  NagataSearchResult result;
  const std::size_t colors = m + 1;
  for (double c = options.c_min; c <= c_max + kSlack; c += 0.5) {
    SearchAttempt attempt;
    attempt.constant = c;
    attempt.carve_radius = static_cast<std::size_t>(std::floor(c * r / 2 + kSlack));
    const Carving carving = carve(g, attempt.carve_radius);
    attempt.clusters = carving.clusters.size();
    const ConflictGraph adj = conflict_graph(g, carving, r, attempt.conflict_edges);

    std::optional<std::vector<std::size_t>> coloring;
    if (colors == 1) {
      if (attempt.conflict_edges == 0) {
        coloring = std::vector<std::size_t>(adj.size(), 0);
      } else {
        attempt.note = "conflict graph has edges; one collection cannot separate the clusters";
      }
    } else if (colors == 2) {
      std::vector<std::size_t> cycle;
      coloring = two_color(adj, cycle);
      if (!coloring) {
        for (auto idx : cycle) attempt.odd_cycle.push_back(carving.centers[idx]);
        attempt.note = "conflict graph has an odd cycle of length " + std::to_string(cycle.size());
      }
    } else {
      auto greedy = dsatur(adj);
      const std::size_t used = greedy.empty() ? 0 : *std::max_element(greedy.begin(), greedy.end()) + 1;
      if (used <= colors) {
        coloring = std::move(greedy);
      } else if (adj.size() <= options.exact_coloring_limit) {
        coloring = exact_coloring(adj, colors);
        if (!coloring) attempt.note = "conflict graph is not " + std::to_string(colors) + "-colorable";
      } else {
        attempt.note = "DSATUR needed " + std::to_string(used) + " colors; too many clusters for exact search";
      }
    }

    if (coloring) {
      Decomposition d;
      d.collections.resize(colors);
      d.scale = r;
      d.constant = c;
      d.dimension = m;
      for (std::size_t idx = 0; idx < carving.clusters.size(); ++idx) {
        d.collections[(*coloring)[idx]].push_back(carving.clusters[idx]);
      }
      auto verdict = verify_decomposition(g, d);
      if (!verdict.valid()) {
        throw std::logic_error("search produced an invalid decomposition: " +
                               verdict.violation->describe());
      }
      attempt.success = true;
      result.attempts.push_back(std::move(attempt));
      result.decomposition = std::move(d);
      result.certificate = std::move(verdict.certificate);
      return result;
    }
    result.attempts.push_back(std::move(attempt));
  }
  return result;
}

Decomposition path_decomposition(std::size_t n) {
  Decomposition d;
  d.collections.resize(2);
  d.scale = 2;
  d.constant = 1;
  d.dimension = 1;
  for (std::size_t start = 0, i = 0; start < n; start += 3, ++i) {
    VertexSet block;
    for (Vertex v = start; v < std::min(n, start + 3); ++v) block.push_back(v);
    d.collections[i % 2].push_back(std::move(block));
  }
  return d;
}

}  // namespace qcgeom
