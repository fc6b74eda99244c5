#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nzflow {

// Finite undirected multigraph on vertices {0,...,n-1}. Edge endpoints keep
// their input order and edge indices are stable. Parallel edges are allowed,
// loops are rejected at construction.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> endpoints(int e) const { return edges_[e]; }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  // Edge indices incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  int other_endpoint(int e, int v) const {
    auto [u, w] = edges_[e];
    return u == v ? w : u;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
};

// The common vertex degree, or nullopt when the graph is not regular.
// Requires at least one vertex.
std::optional<int> valency(const Graph& g);

bool is_connected(const Graph& g);

struct Component {
  Graph graph;
  std::vector<int> vertex_map;  // component vertex -> parent vertex
  std::vector<int> edge_map;    // component edge -> parent edge
};

// Connected components, ordered by smallest contained vertex; vertices and
// edges keep their parent-relative order.
std::vector<Component> components(const Graph& g);

struct Bipartition {
  std::vector<int> left;  // the side containing vertex 0
  std::vector<int> right;
};

// Two-coloring by breadth-first layering. nullopt when an odd cycle exists.
// Requires a connected graph (Errc::not_connected otherwise).
std::optional<Bipartition> bipartition(const Graph& g);

struct BipartiteSlice {
  Graph graph;                // on sorted(P) followed by sorted(Q)
  std::vector<int> vertices;  // slice vertex -> parent vertex
  int left_size = 0;          // |P|
  std::vector<int> edge_map;  // slice edge -> parent edge
};

// The bipartite subgraph of edges with one end in P and the other in Q.
// P and Q must be disjoint.
BipartiteSlice induced_bipartite_between(const Graph& g, std::span<const int> p,
                                         std::span<const int> q);

}  // namespace nzflow
