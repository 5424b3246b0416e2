#include "micc/circuits.hpp"

#include "micc/error.hpp"

#include <algorithm>
#include <tuple>

namespace micc {

int DualGraph::betti_number() const {
  // Components via union-find.
  std::vector<int> parent(vertex_count);
  for (int v = 0; v < vertex_count; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertex_count;
  for (const auto& e : edges) {
    const int a = find(e.upper), b = find(e.lower);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return static_cast<int>(edges.size()) - vertex_count + components;
}

DualGraph dual_graph(std::span<const Face> faces) {
  std::size_t sides = 0;
  for (const auto& f : faces) sides += f.alpha.size();
  DualGraph g;
  g.vertex_count = static_cast<int>(faces.size());
  g.edges.resize(sides / 2);
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.edges[i].label = static_cast<int>(i);
  for (int fi = 0; fi < g.vertex_count; ++fi) {
    for (const auto& e : faces[fi].alpha) {
      (e.side == Side::right ? g.edges[e.label].upper : g.edges[e.label].lower) = fi;
    }
  }
  return g;
}

Circuit canonical_circuit(const DualGraph& graph, std::vector<int> vertices, std::vector<int> edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> rv{vertices.front()};
  rv.insert(rv.end(), vertices.rbegin(), vertices.rend() - 1);
  std::vector<int> re(edges.rbegin(), edges.rend());

  Circuit best;
  bool have = false;
  for (const auto* dir : {&edges, &re}) {
    const auto& vs = dir == &edges ? vertices : rv;
    for (int r = 0; r < m; ++r) {
      Circuit c;
      for (int j = 0; j < m; ++j) {
        const int e = (*dir)[(r + j) % m];
        c.edges.push_back(e);
        c.vertices.push_back(vs[(r + j) % m]);
        c.labels.push_back(graph.edges[e].label);
      }
      if (!have || std::tie(c.labels, c.edges, c.vertices) < std::tie(best.labels, best.edges, best.vertices)) {
        best = std::move(c);
        have = true;
      }
    }
  }
  return best;
}

namespace {

struct Search {
  const DualGraph& graph;
  std::size_t cap;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor, edge)
  std::vector<bool> on_path;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  std::vector<Circuit> found;

  void emit(std::vector<int> vertices, std::vector<int> edges) {
    if (found.size() >= cap) {
      throw Error(ErrorCode::circuit_limit_exceeded, "more than " + std::to_string(cap) + " elementary circuits");
    }
    found.push_back(canonical_circuit(graph, std::move(vertices), std::move(edges)));
  }

  void extend(int root, int v) {
    for (const auto& [w, e] : adjacency[v]) {
      if (w == root) {
        // Each undirected cycle closes twice; keep the direction whose first
        // edge has the smaller index.
        if (!path_edges.empty() && path_edges.front() < e) {
          auto edges = path_edges;
          edges.push_back(e);
          emit(path_vertices, std::move(edges));
        }
      } else if (w > root && !on_path[w]) {
        on_path[w] = true;
        path_vertices.push_back(w);
        path_edges.push_back(e);
        extend(root, w);
        path_edges.pop_back();
        path_vertices.pop_back();
        on_path[w] = false;
      }
    }
  }
};

}  // namespace

std::vector<Circuit> elementary_circuits(const DualGraph& graph, std::size_t cap) {
  Search s{graph, cap, {}, {}, {}, {}, {}};
  s.adjacency.resize(graph.vertex_count);
  s.on_path.assign(graph.vertex_count, false);
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.upper == edge.lower) {
      s.emit({edge.upper}, {e});
      continue;
    }
    s.adjacency[edge.upper].emplace_back(edge.lower, e);
    s.adjacency[edge.lower].emplace_back(edge.upper, e);
  }
  for (int root = 0; root < graph.vertex_count; ++root) {
    s.on_path[root] = true;
    s.path_vertices = {root};
    s.extend(root, root);
    s.on_path[root] = false;
  }
  std::sort(s.found.begin(), s.found.end(), [](const Circuit& a, const Circuit& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::tie(a.labels, a.edges, a.vertices) < std::tie(b.labels, b.edges, b.vertices);
  });
  return std::move(s.found);
}

}  // namespace micc
