#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/partition.hpp"
#include "nzflow/perm_group.hpp"

namespace nzflow {

struct QuotientGraph {
  Graph graph;                          // simple graph on block indices
  std::vector<int> edge_map;            // parent edge -> quotient edge, -1 if within a block
  std::vector<int> within_block_edges;  // parent edges with both ends in one block
};

// Blocks become vertices; two blocks are adjacent iff at least one parent
// edge crosses them. Quotient edges are numbered in order of first crossing
// parent edge.
QuotientGraph quotient_graph(const Graph& g, const VertexPartition& p);

struct MulticoverCert {
  int t = 0;                  // uniform between-block regularity
  Graph quotient;
  std::vector<int> edge_map;  // parent edge -> quotient edge (total)
  VertexPartition partition;
};

struct CertifyResult {
  std::optional<MulticoverCert> cert;
  // Diagnostics when certification fails:
  std::string reason;
  int block_p = -1;
  int block_q = -1;

  bool ok() const { return cert.has_value(); }
};

// Certifies that g is a multicover of the quotient by p: all blocks
// independent and every between-block bipartite subgraph t-regular with one
// uniform t >= 1. Requires g connected.
CertifyResult certify_multicover(const Graph& g, const VertexPartition& p);

// The image of g acting on block indices. Requires p to be g-invariant
// (Errc::partition_not_invariant otherwise). Duplicate generator images are
// dropped; the result acts faithfully on blocks, so any kernel is already
// factored out.
PermGroup induced_quotient_action(const PermGroup& g, const VertexPartition& p);

// Lifts a nowhere-zero k-flow on cert.quotient to the covered graph: each
// parent edge gets its quotient edge's value, oriented from the tail block
// to the head block. Throws Errc::invalid_quotient_flow unless the input
// verifies as a nowhere-zero k-flow on the quotient.
Flow lift_flow(const Graph& g, const MulticoverCert& cert, const Flow& quotient_flow);

}  // namespace nzflow
