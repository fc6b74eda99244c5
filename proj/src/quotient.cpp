#include "nzflow/quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nzflow/error.hpp"

namespace nzflow {

QuotientGraph quotient_graph(const Graph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("partition does not match the graph");
  }
  std::map<std::pair<int, int>, int> quotient_index;
  std::vector<std::pair<int, int>> quotient_edges;
  std::vector<int> edge_map(g.edge_count(), -1);
  std::vector<int> within;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    int bu = p.block_of(u), bv = p.block_of(v);
    if (bu == bv) {
      within.push_back(e);
      continue;
    }
    std::pair<int, int> key{std::min(bu, bv), std::max(bu, bv)};
    auto [it, inserted] = quotient_index.try_emplace(key, static_cast<int>(quotient_edges.size()));
    if (inserted) quotient_edges.push_back(key);
    edge_map[e] = it->second;
  }
  return QuotientGraph{Graph(p.block_count(), std::move(quotient_edges)),
                       std::move(edge_map), std::move(within)};
}

CertifyResult certify_multicover(const Graph& g, const VertexPartition& p) {
  if (!is_connected(g)) fail(Errc::not_connected, "multicover certification needs a connected graph");

  QuotientGraph q = quotient_graph(g, p);
  if (!q.within_block_edges.empty()) {
    int e = q.within_block_edges.front();
    int block = p.block_of(g.endpoints(e).first);
    return CertifyResult{std::nullopt,
                         "block " + std::to_string(block) + " is not independent (edge " +
                             std::to_string(e) + ")",
                         block, -1};
  }
  if (q.graph.edge_count() == 0) {
    return CertifyResult{std::nullopt, "quotient has no edges", -1, -1};
  }

  // Cross-degree of every vertex toward each adjacent block must be one
  // uniform t.
  std::vector<std::map<int, int>> degree_toward(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    int qe = q.edge_map[e];
    degree_toward[u][qe] += 1;
    degree_toward[v][qe] += 1;
  }

  int t = -1;
  for (int qe = 0; qe < q.graph.edge_count(); ++qe) {
    auto [bp, bq] = q.graph.endpoints(qe);
    for (int block : {bp, bq}) {
      for (int v : p.block(block)) {
        auto it = degree_toward[v].find(qe);
        int deg = it == degree_toward[v].end() ? 0 : it->second;
        if (t == -1) t = deg;
        if (deg != t) {
          return CertifyResult{
              std::nullopt,
              "blocks " + std::to_string(bp) + "," + std::to_string(bq) +
                  ": vertex " + std::to_string(v) + " has cross-degree " +
                  std::to_string(deg) + ", expected " + std::to_string(t),
              bp, bq};
        }
      }
    }
  }
  return CertifyResult{MulticoverCert{t, std::move(q.graph), std::move(q.edge_map), p},
                       "", -1, -1};
}

PermGroup induced_quotient_action(const PermGroup& g, const VertexPartition& p) {
  if (g.degree() != p.vertex_count()) {
    throw std::invalid_argument("partition does not match the group degree");
  }
  std::vector<Perm> induced;
  for (const Perm& gen : g.generators()) {
    std::vector<int> image(p.block_count(), -1);
    for (int b = 0; b < p.block_count(); ++b) {
      image[b] = p.block_of(gen(p.block(b).front()));
      for (int v : p.block(b)) {
        if (p.block_of(gen(v)) != image[b]) {
          fail(Errc::partition_not_invariant,
               "generator splits block " + std::to_string(b));
        }
      }
    }
    Perm blocks_perm(std::move(image));
    if (std::find(induced.begin(), induced.end(), blocks_perm) == induced.end()) {
      induced.push_back(std::move(blocks_perm));
    }
  }
  if (induced.empty()) induced.push_back(Perm::identity(p.block_count()));
  return PermGroup(p.block_count(), std::move(induced), g.order_cap());
}

Flow lift_flow(const Graph& g, const MulticoverCert& cert, const Flow& quotient_flow) {
  VerificationReport report = verify_flow(cert.quotient, quotient_flow);
  if (!report.nowhere_zero) {
    fail(Errc::invalid_quotient_flow, report.to_string());
  }
  Flow lifted;
  lifted.k = quotient_flow.k;
  lifted.orientation.dir.resize(g.edge_count());
  lifted.values.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int qe = cert.edge_map[e];
    if (qe < 0) {
      fail(Errc::invalid_quotient_flow, "certificate does not map edge " + std::to_string(e));
    }
    auto [tail_block, head_block] = quotient_flow.orientation.dir[qe];
    auto [u, v] = g.endpoints(e);
    if (cert.partition.block_of(u) == tail_block &&
        cert.partition.block_of(v) == head_block) {
      lifted.orientation.dir[e] = {u, v};
    } else if (cert.partition.block_of(v) == tail_block &&
               cert.partition.block_of(u) == head_block) {
      lifted.orientation.dir[e] = {v, u};
    } else {
      fail(Errc::invalid_quotient_flow,
           "edge " + std::to_string(e) + " does not join its mapped blocks");
    }
    lifted.values[e] = quotient_flow.values[qe];
  }
  return lifted;
}

}  // namespace nzflow
