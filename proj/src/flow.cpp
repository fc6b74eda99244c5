#include "nzflow/flow.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "nzflow/error.hpp"

namespace nzflow {

std::string VerificationReport::to_string() const {
  switch (fault) {
    case FlowFault::none:
      return "OK nowhere-zero " + std::to_string(k) + "-flow";
    case FlowFault::bad_k:
      return "FAIL k < 2";
    case FlowFault::orientation_mismatch:
      return "FAIL orientation mismatch at edge " + std::to_string(edge);
    case FlowFault::value_out_of_range:
      return "FAIL value out of range at edge " + std::to_string(edge);
    case FlowFault::conservation:
      return "FAIL conservation at vertex " + std::to_string(vertex);
    case FlowFault::zero_value:
      return "FAIL zero value at edge " + std::to_string(edge);
  }
  return "FAIL";
}

VerificationReport verify_flow(const Graph& g, const Flow& f) {
  if (static_cast<int>(f.values.size()) != g.edge_count() ||
      static_cast<int>(f.orientation.dir.size()) != g.edge_count()) {
    throw std::invalid_argument("flow edge count does not match the graph");
  }
  VerificationReport report;
  report.k = f.k;
  if (f.k < 2) {
    report.fault = FlowFault::bad_k;
    return report;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    auto [tail, head] = f.orientation.dir[e];
    if (!((tail == u && head == v) || (tail == v && head == u))) {
      report.fault = FlowFault::orientation_mismatch;
      report.edge = e;
      return report;
    }
    if (std::abs(f.values[e]) > f.k - 1) {
      report.fault = FlowFault::value_out_of_range;
      report.edge = e;
      return report;
    }
  }
  std::vector<long long> net(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [tail, head] = f.orientation.dir[e];
    net[tail] += f.values[e];
    net[head] -= f.values[e];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (net[v] != 0) {
      report.fault = FlowFault::conservation;
      report.vertex = v;
      return report;
    }
  }
  report.valid = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.values[e] == 0) {
      report.fault = FlowFault::zero_value;
      report.edge = e;
      return report;
    }
  }
  report.nowhere_zero = true;
  return report;
}

Flow eulerian_two_flow(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      fail(Errc::odd_degree_vertex, "vertex " + std::to_string(v) + " has odd degree");
    }
  }
  Flow flow;
  flow.k = 2;
  flow.orientation.dir.assign(g.edge_count(), {-1, -1});
  flow.values.assign(g.edge_count(), 1);

  // Hierholzer, one circuit per component; edges consumed in ascending index
  // order at each vertex and oriented along the walk.
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (cursor[start] >= g.incident_edges(start).size()) continue;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      const auto& inc = g.incident_edges(v);
      while (cursor[v] < inc.size() && used[inc[cursor[v]]]) ++cursor[v];
      if (cursor[v] == inc.size()) {
        stack.pop_back();
        continue;
      }
      int e = inc[cursor[v]++];
      used[e] = 1;
      int w = g.other_endpoint(e, v);
      flow.orientation.dir[e] = {v, w};
      stack.push_back(w);
    }
  }
  return flow;
}

namespace {

// Proper d-edge-coloring of a d-regular bipartite multigraph by alternating
// path augmentation. Deterministic: edges in index order, lowest free colors,
// so reruns give identical colorings.
std::vector<int> konig_edge_coloring(const Graph& g, int d) {
  const int n = g.vertex_count();
  std::vector<int> color(g.edge_count(), -1);
  std::vector<std::vector<int>> at(n, std::vector<int>(d, -1));  // at[v][c] = edge

  auto lowest_free = [&](int v) {
    for (int c = 0; c < d; ++c) {
      if (at[v][c] == -1) return c;
    }
    return -1;
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    int ca = lowest_free(a);
    int cb = lowest_free(b);
    if (ca == -1 || cb == -1) {
      fail(Errc::internal_invariant_violation, "edge coloring ran out of colors");
    }
    if (ca != cb && at[b][ca] != -1) {
      // Free ca at b by flipping the alternating ca/cb chain that starts at
      // b. In a bipartite graph the chain cannot reach a (it could only
      // arrive there on a ca-edge, and a has none), so ca stays free at a.
      std::vector<int> chain;
      int v = b;
      int want = ca;
      while (at[v][want] != -1) {
        int ce = at[v][want];
        chain.push_back(ce);
        v = g.other_endpoint(ce, v);
        want = want == ca ? cb : ca;
      }
      for (int ce : chain) {
        auto [x, y] = g.endpoints(ce);
        at[x][color[ce]] = -1;
        at[y][color[ce]] = -1;
      }
      for (int ce : chain) {
        color[ce] = color[ce] == ca ? cb : ca;
        auto [x, y] = g.endpoints(ce);
        at[x][color[ce]] = ce;
        at[y][color[ce]] = ce;
      }
    }
    color[e] = ca;
    at[a][ca] = e;
    at[b][ca] = e;
  }
  return color;
}

}  // namespace

Flow bipartite_regular_three_flow(const Graph& g) {
  if (!is_connected(g)) fail(Errc::not_connected, "graph must be connected");
  auto d = valency(g);
  if (!d) fail(Errc::not_regular, "graph is not regular");
  auto parts = bipartition(g);
  if (!parts) fail(Errc::not_bipartite, "graph contains an odd cycle");
  if (*d < 2) fail(Errc::valency_too_small, "valency must be at least 2");

  std::vector<int> color = konig_edge_coloring(g, *d);

  // Zero-sum weight pattern over the d color classes, values in {+-1, +-2}.
  std::vector<int> weight(*d);
  if (*d % 2 == 0) {
    for (int c = 0; c < *d; ++c) weight[c] = c < *d / 2 ? 1 : -1;
  } else {
    weight[0] = 2;
    weight[1] = -1;
    weight[2] = -1;
    const int rest = *d - 3;
    for (int i = 0; i < rest; ++i) weight[3 + i] = i < rest / 2 ? 1 : -1;
  }

  std::vector<char> in_left(g.vertex_count(), 0);
  for (int v : parts->left) in_left[v] = 1;

  Flow flow;
  flow.k = 3;
  flow.orientation.dir.resize(g.edge_count());
  flow.values.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    flow.orientation.dir[e] = in_left[u] ? std::pair{u, v} : std::pair{v, u};
    flow.values[e] = weight[color[e]];
  }
  return flow;
}

namespace {

struct SpanningTree {
  std::vector<int> parent_edge;  // -1 at roots
  std::vector<int> parent;       // -1 at roots
  std::vector<int> depth;
  std::vector<char> in_tree;     // per edge
};

SpanningTree bfs_tree(const Graph& g) {
  SpanningTree tree{std::vector<int>(g.vertex_count(), -1),
                    std::vector<int>(g.vertex_count(), -1),
                    std::vector<int>(g.vertex_count(), 0),
                    std::vector<char>(g.edge_count(), 0)};
  std::vector<char> seen(g.vertex_count(), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : g.incident_edges(u)) {
        int w = g.other_endpoint(e, u);
        if (seen[w]) continue;
        seen[w] = 1;
        tree.parent_edge[w] = e;
        tree.parent[w] = u;
        tree.depth[w] = tree.depth[u] + 1;
        tree.in_tree[e] = 1;
        queue.push_back(w);
      }
    }
  }
  return tree;
}

}  // namespace

std::optional<Flow> solve_nz_kflow(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!is_connected(g)) fail(Errc::not_connected, "solver needs a connected graph");

  const int m = g.edge_count();
  SpanningTree tree = bfs_tree(g);

  std::vector<int> tree_edges;
  std::vector<int> cotree;
  for (int e = 0; e < m; ++e) (tree.in_tree[e] ? tree_edges : cotree).push_back(e);
  std::vector<int> tree_slot(m, -1);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) tree_slot[tree_edges[i]] = static_cast<int>(i);

  // Signed fundamental cycle of each cotree edge: traverse the cotree edge
  // tail->head, then return head->tail along tree paths; a tree edge counts
  // +1 when crossed in its stored direction.
  std::vector<std::vector<std::pair<int, int>>> cycle(cotree.size());  // (tree slot, sign)
  for (std::size_t ci = 0; ci < cotree.size(); ++ci) {
    auto [u, v] = g.endpoints(cotree[ci]);
    auto& entries = cycle[ci];
    // walk from v and u up to their LCA; the path from v is traversed in
    // walking direction, the path from u against it
    std::vector<std::pair<int, int>> from_u;
    int a = u, b = v;
    auto step = [&](int& vert, std::vector<std::pair<int, int>>* out, int walk_sign) {
      int e = tree.parent_edge[vert];
      auto [t, h] = g.endpoints(e);
      // walking child->parent crosses the edge from child side
      int sign = (t == vert) ? walk_sign : -walk_sign;
      out->emplace_back(tree_slot[e], sign);
      vert = tree.parent[vert];
    };
    while (tree.depth[a] > tree.depth[b]) step(a, &from_u, -1);
    while (tree.depth[b] > tree.depth[a]) step(b, &entries, +1);
    while (a != b) {
      step(a, &from_u, -1);
      step(b, &entries, +1);
    }
    entries.insert(entries.end(), from_u.rbegin(), from_u.rend());
  }

  // Decision order: decreasing fundamental-cycle length, then edge index.
  std::vector<std::size_t> order(cotree.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cycle[a].size() != cycle[b].size()) return cycle[a].size() > cycle[b].size();
    return cotree[a] < cotree[b];
  });

  std::vector<long long> partial(tree_edges.size(), 0);
  std::vector<int> remaining(tree_edges.size(), 0);
  for (std::size_t ci = 0; ci < cotree.size(); ++ci) {
    for (auto [slot, sign] : cycle[ci]) {
      (void)sign;
      remaining[slot] += 1;
    }
  }
  // A tree edge on no fundamental cycle is a bridge and must carry 0.
  for (std::size_t slot = 0; slot < tree_edges.size(); ++slot) {
    if (remaining[slot] == 0) return std::nullopt;
  }

  std::vector<int> value_order;
  for (int a = 1; a <= k - 1; ++a) {
    value_order.push_back(a);
    value_order.push_back(-a);
  }

  std::vector<int> chosen(cotree.size(), 0);
  long long nodes = 0;
  const long long limit = k - 1;

  // Depth-first over the ordered cotree. A tree edge is pruned as soon as
  // its already-forced partial sum cannot reach a nonzero value in range.
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const std::size_t ci = order[i];
    for (int val : value_order) {
      if (++nodes > opts.budget) {
        fail(Errc::budget_exceeded,
             "solver exceeded " + std::to_string(opts.budget) + " nodes");
      }
      for (auto [slot, sign] : cycle[ci]) {
        partial[slot] += static_cast<long long>(sign) * val;
        remaining[slot] -= 1;
      }
      bool ok = true;
      for (auto [slot, sign] : cycle[ci]) {
        (void)sign;
        const long long s = partial[slot];
        const long long reach = static_cast<long long>(remaining[slot]) * limit;
        if (remaining[slot] == 0) {
          if (s == 0 || s > limit || s < -limit) {
            ok = false;
            break;
          }
        } else if (s - reach > limit || s + reach < -limit) {
          ok = false;
          break;
        }
      }
      chosen[ci] = val;
      if (ok && self(self, i + 1)) return true;
      for (auto [slot, sign] : cycle[ci]) {
        partial[slot] -= static_cast<long long>(sign) * val;
        remaining[slot] += 1;
      }
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;

  Flow flow;
  flow.k = k;
  flow.orientation.dir = g.edges();
  flow.values.assign(m, 0);
  for (std::size_t ci = 0; ci < cotree.size(); ++ci) flow.values[cotree[ci]] = chosen[ci];
  for (std::size_t slot = 0; slot < tree_edges.size(); ++slot) {
    flow.values[tree_edges[slot]] = static_cast<int>(partial[slot]);
  }
  return flow;
}

Flow reinterpret_flow(const Flow& f, int new_k) {
  if (new_k < f.k) {
    throw std::invalid_argument("reinterpret_flow cannot shrink k");
  }
  Flow out = f;
  out.k = new_k;
  return out;
}

}  // namespace nzflow
