#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qcgeom/stabilizer.hpp"

namespace qcgeom {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free
using Edge = std::pair<Vertex, Vertex>; // first < second

VertexSet normalize(VertexSet vertices);

// Shortest-path length; unreachable pairs are infinite, which compares
// greater than every finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t hops) : hops_(static_cast<std::uint32_t>(hops)) {}
  static constexpr Distance infinite() { return Distance(kInfinite, Tag{}); }

  constexpr bool is_finite() const { return hops_ != kInfinite; }
  std::size_t value() const;

  // d <= r for a real radius r (always false when infinite).
  bool within(double r) const;

  friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

  std::string to_string() const;

 private:
  struct Tag {};
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  constexpr Distance(std::uint32_t raw, Tag) : hops_(raw) {}
  std::uint32_t hops_ = 0;
};

// Undirected simple graph on [n] with unweighted shortest-path metric.
// Distances are computed by BFS; all pairs up front when n <= 4096,
// otherwise per source on demand behind a mutex. Copies share the cache.
class ConnectivityGraph {
 public:
  static constexpr std::size_t kAllPairsLimit = 4096;

  ConnectivityGraph() : ConnectivityGraph(0, {}) {}
  // Self-loops are dropped, duplicate edges merged.
  ConnectivityGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t max_degree() const;

  Distance distance(Vertex u, Vertex v) const;

  // Largest distance between any two vertices; infinite if disconnected.
  Distance diameter() const;
  // Largest pairwise distance inside `vertices` (0 for fewer than two).
  Distance diameter_of(const VertexSet& vertices) const;

  friend bool operator==(const ConnectivityGraph& a, const ConnectivityGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  struct DistanceCache;
  const std::vector<std::uint32_t>& row(Vertex source) const;
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::shared_ptr<DistanceCache> cache_;
};

// Edge (u, v) iff some generator has both u and v in its support.
ConnectivityGraph build_connectivity_graph(const StabilizerCode& code);

ConnectivityGraph path_graph(std::size_t n);
ConnectivityGraph grid_graph(std::size_t width, std::size_t height);
ConnectivityGraph complete_graph(std::size_t n);

// Edges with exactly one endpoint in u.
std::vector<Edge> boundary(const ConnectivityGraph& g, const VertexSet& u);

// { v : dist(center, v) <= r }; fractional radii round down.
VertexSet ball(const ConnectivityGraph& g, Vertex center, double r);

// min over a in A, b in B of dist(a, b). Throws InputError on an empty set.
Distance set_distance(const ConnectivityGraph& g, const VertexSet& a, const VertexSet& b);

// Largest ball of radius r over all centers.
std::size_t b_max(const ConnectivityGraph& g, double r);

}  // namespace qcgeom
