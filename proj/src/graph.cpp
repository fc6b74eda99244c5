#include "nzflow/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "nzflow/error.hpp"

namespace nzflow {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loops are not allowed");
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
}

std::optional<int> valency(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("valency of an empty graph");
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

namespace {

// BFS labeling: component id per vertex, components numbered by smallest root.
std::pair<std::vector<int>, int> component_ids(const Graph& g) {
  std::vector<int> id(g.vertex_count(), -1);
  int count = 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (id[start] != -1) continue;
    id[start] = count;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : g.incident_edges(u)) {
        int w = g.other_endpoint(e, u);
        if (id[w] == -1) {
          id[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(id), count};
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return component_ids(g).second == 1;
}

std::vector<Component> components(const Graph& g) {
  auto [id, count] = component_ids(g);

  std::vector<std::vector<int>> vertex_maps(count);
  std::vector<int> local(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    local[v] = static_cast<int>(vertex_maps[id[v]].size());
    vertex_maps[id[v]].push_back(v);
  }

  std::vector<std::vector<std::pair<int, int>>> edge_lists(count);
  std::vector<std::vector<int>> edge_maps(count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    edge_lists[id[u]].emplace_back(local[u], local[v]);
    edge_maps[id[u]].push_back(e);
  }

  std::vector<Component> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    out.push_back(Component{
        Graph(static_cast<int>(vertex_maps[c].size()), std::move(edge_lists[c])),
        std::move(vertex_maps[c]), std::move(edge_maps[c])});
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("bipartition of an empty graph");
  if (!is_connected(g)) fail(Errc::not_connected, "bipartition needs a connected graph");

  std::vector<int> color(g.vertex_count(), -1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e : g.incident_edges(u)) {
      int w = g.other_endpoint(e, u);
      if (color[w] == -1) {
        color[w] = 1 - color[u];
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    (color[v] == 0 ? parts.left : parts.right).push_back(v);
  }
  return parts;
}

BipartiteSlice induced_bipartite_between(const Graph& g, std::span<const int> p,
                                         std::span<const int> q) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<int> vertices;
  auto add_side = [&](std::span<const int> verts, int tag) {
    std::vector<int> sorted(verts.begin(), verts.end());
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
      if (v < 0 || v >= g.vertex_count() || side[v] != -1) {
        throw std::invalid_argument("P and Q must be disjoint vertex sets");
      }
      side[v] = tag;
      vertices.push_back(v);
    }
  };
  add_side(p, 0);
  const int left_size = static_cast<int>(vertices.size());
  add_side(q, 1);

  std::unordered_map<int, int> local;
  local.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_map;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (side[u] == -1 || side[v] == -1 || side[u] == side[v]) continue;
    edges.emplace_back(local[u], local[v]);
    edge_map.push_back(e);
  }
  Graph subgraph(static_cast<int>(vertices.size()), std::move(edges));
  return BipartiteSlice{std::move(subgraph), std::move(vertices), left_size,
                        std::move(edge_map)};
}

}  // namespace nzflow
