#pragma once

#include "micc/faces.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace micc {

// For a face dual graph, upper is the face above the alpha segment and lower
// the face below. Template graphs use them as plain endpoints.
struct DualEdge {
  int label = 0;
  int upper = 0;
  int lower = 0;
};

struct DualGraph {
  int vertex_count = 0;
  std::vector<DualEdge> edges;

  int betti_number() const;
};

DualGraph dual_graph(std::span<const Face> faces);

// vertices[j] and vertices[j+1] are joined by edges[j] (indices into the
// graph's edge list); labels[j] is that edge's label.
struct Circuit {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> labels;

  int length() const noexcept { return static_cast<int>(edges.size()); }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline constexpr std::size_t default_circuit_cap = 1'000'000;

// Every vertex-simple cycle once, in canonical form, sorted by length then labels.
std::vector<Circuit> elementary_circuits(const DualGraph& graph, std::size_t cap = default_circuit_cap);

// Minimal rotation over both traversal directions, compared by labels then vertices.
Circuit canonical_circuit(const DualGraph& graph, std::vector<int> vertices, std::vector<int> edges);

}  // namespace micc
