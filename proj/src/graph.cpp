#include "qcgeom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<std::uint32_t> dist(adjacency.size(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : adjacency[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Distance from_raw(std::uint32_t raw) {
  return raw == kUnreached ? Distance::infinite() : Distance(raw);
}

std::size_t floor_radius(double r) {
  if (!(r >= 0)) throw InputError("radius must be non-negative");
  return static_cast<std::size_t>(std::floor(r));
}

}  // namespace

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::size_t Distance::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite distance");
  return hops_;
}

bool Distance::within(double r) const {
  return is_finite() && static_cast<double>(hops_) <= r;
}

std::string Distance::to_string() const { return is_finite() ? std::to_string(hops_) : "inf"; }

struct ConnectivityGraph::DistanceCache {
  std::vector<std::vector<std::uint32_t>> all_pairs;  // filled when n <= kAllPairsLimit
  std::mutex mutex;
  std::map<Vertex, std::vector<std::uint32_t>> rows;  // node-based: references stay valid
};

ConnectivityGraph::ConnectivityGraph(std::size_t n, const std::vector<Edge>& edges)
    : n_(n), adjacency_(n), cache_(std::make_shared<DistanceCache>()) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) continue;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  if (n_ <= kAllPairsLimit) {
    cache_->all_pairs.reserve(n_);
    for (Vertex s = 0; s < n_; ++s) cache_->all_pairs.push_back(bfs(adjacency_, s));
  }
}

void ConnectivityGraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                     " vertices");
  }
}

const std::vector<std::uint32_t>& ConnectivityGraph::row(Vertex source) const {
  check_vertex(source);
  if (!cache_->all_pairs.empty()) return cache_->all_pairs[source];
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->rows.find(source);
  if (it == cache_->rows.end()) it = cache_->rows.emplace(source, bfs(adjacency_, source)).first;
  return it->second;
}

bool ConnectivityGraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t ConnectivityGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

Distance ConnectivityGraph::distance(Vertex u, Vertex v) const {
  check_vertex(v);
  return from_raw(row(u)[v]);
}

Distance ConnectivityGraph::diameter() const {
  Distance best(0);
  for (Vertex u = 0; u < n_; ++u) {
    for (auto raw : row(u)) best = std::max(best, from_raw(raw));
  }
  return best;
}

Distance ConnectivityGraph::diameter_of(const VertexSet& vertices) const {
  Distance best(0);
  for (Vertex u : vertices) {
    const auto& r = row(u);
    for (Vertex v : vertices) {
      check_vertex(v);
      best = std::max(best, from_raw(r[v]));
    }
  }
  return best;
}

ConnectivityGraph build_connectivity_graph(const StabilizerCode& code) {
  std::vector<Edge> edges;
  for (const auto& g : code.generators()) {
    const auto supp = g.support();
    for (std::size_t i = 0; i < supp.size(); ++i) {
      for (std::size_t j = i + 1; j < supp.size(); ++j) edges.emplace_back(supp[i], supp[j]);
    }
  }
  return ConnectivityGraph(code.num_qubits(), edges);
}

ConnectivityGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return ConnectivityGraph(n, edges);
}

ConnectivityGraph grid_graph(std::size_t width, std::size_t height) {
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const Vertex v = y * width + x;
      if (x + 1 < width) edges.emplace_back(v, v + 1);
      if (y + 1 < height) edges.emplace_back(v, v + width);
    }
  }
  return ConnectivityGraph(width * height, edges);
}

ConnectivityGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return ConnectivityGraph(n, edges);
}

std::vector<Edge> boundary(const ConnectivityGraph& g, const VertexSet& u) {
  std::vector<bool> inside(g.num_vertices(), false);
  for (Vertex v : u) {
    if (v >= g.num_vertices()) throw InputError("vertex " + std::to_string(v) + " out of range");
    inside[v] = true;
  }
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (inside[e.first] != inside[e.second]) out.push_back(e);
  }
  return out;
}

VertexSet ball(const ConnectivityGraph& g, Vertex center, double r) {
  const std::size_t radius = floor_radius(r);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Distance d = g.distance(center, v);
    if (d.is_finite() && d.value() <= radius) out.push_back(v);
  }
  return out;
}

Distance set_distance(const ConnectivityGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw InputError("set_distance of an empty vertex set");
  Distance best = Distance::infinite();
  for (Vertex u : a) {
    for (Vertex v : b) best = std::min(best, g.distance(u, v));
  }
  return best;
}

std::size_t b_max(const ConnectivityGraph& g, double r) {
  const std::size_t radius = floor_radius(r);
  std::size_t best = 0;
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    std::size_t count = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Distance d = g.distance(c, v);
      if (d.is_finite() && d.value() <= radius) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace qcgeom
