#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcgeom/graph.hpp"

namespace qcgeom {

using Collection = std::vector<VertexSet>;

// m + 1 collections of blocks covering V; blocks in one collection are
// pairwise r-separated and every block has diameter <= c * r.
struct Decomposition {
  std::vector<Collection> collections;
  double scale = 2;     // r
  double constant = 1;  // c
  std::size_t dimension = 1;  // m

  double bound_diameter() const { return constant * scale; }
  std::size_t num_blocks() const;
  // Union of every block of collection i.
  VertexSet collection_union(std::size_t i) const;
};

struct DecompositionViolation {
  enum class Kind { CollectionCount, VertexOutOfRange, EmptyBlock, Uncovered, UnderSeparated, Oversized };
  Kind kind = Kind::Uncovered;
  std::size_t collection = 0;
  std::size_t block = 0;
  std::size_t other_block = 0;
  Vertex vertex = 0;        // uncovered / out-of-range vertex, or diameter witness
  Vertex other_vertex = 0;  // second diameter witness
  Distance distance;        // offending separation or diameter

  std::string describe() const;
};

struct DecompositionCertificate {
  std::size_t num_vertices = 0;
  std::size_t num_blocks = 0;
  Distance min_separation = Distance::infinite();  // over same-collection pairs
  Distance max_block_diameter;
  std::vector<std::string> checks;
};

struct VerifyResult {
  std::optional<DecompositionCertificate> certificate;
  std::optional<DecompositionViolation> violation;

  bool valid() const { return certificate.has_value(); }
};

// Checks cover, per-collection r-separation and c*r-boundedness exactly;
// reports the first violation with witnesses.
VerifyResult verify_decomposition(const ConnectivityGraph& g, const Decomposition& d);

struct SearchAttempt {
  double constant = 0;
  std::size_t carve_radius = 0;
  std::size_t clusters = 0;
  std::size_t conflict_edges = 0;
  bool success = false;
  // Clusters forming an odd cycle of the conflict graph (m = 1 failures),
  // each given by its carving center.
  std::vector<Vertex> odd_cycle;
  std::string note;
};

struct NagataSearchResult {
  std::optional<Decomposition> decomposition;
  std::optional<DecompositionCertificate> certificate;
  std::vector<SearchAttempt> attempts;

  bool found() const { return decomposition.has_value(); }
};

struct NagataSearchOptions {
  // Smallest constant tried; the grid is c_min, c_min + 1/2, ..., c_max.
  double c_min = 1.0;
  // Clusters up to this count get an exact coloring when DSATUR fails (m >= 2).
  std::size_t exact_coloring_limit = 40;
};

// Heuristic search for a decomposition with the smallest c on the grid:
// carve V into balls of radius floor(c r / 2) around farthest-point samples
// (seeded at vertex 0, ties to the smaller index), join clusters closer than
// r in a conflict graph, and (m+1)-color it. Failure does not bound the
// Nagata dimension from below.
NagataSearchResult find_nagata_decomposition(const ConnectivityGraph& g, std::size_t m, double r,
                                             double c_max, const NagataSearchOptions& options = {});

// Blocks of three consecutive vertices, alternating between two collections
// (valid at r = 2, c = 1).
Decomposition path_decomposition(std::size_t n);

}  // namespace qcgeom
