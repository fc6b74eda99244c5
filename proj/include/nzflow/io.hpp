#pragma once

#include <iosfwd>
#include <string>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/partition.hpp"
#include "nzflow/perm_group.hpp"
#include "nzflow/pipeline.hpp"
#include "nzflow/quotient.hpp"

// Text formats, one record per line, '#' starts a comment:
//   graph:      "v <n>" then one "e <u> <v>" per edge (index = line order)
//   group:      "deg <n>" then one "gen <i0> ... <i(n-1)>" per generator
//   flow:       "k <k>" then one "f <tail> <head> <value>" per edge, in
//               edge-index order
//   partition:  one "b <v1> <v2> ..." per block
//   certificate: quotient graph lines, then "t <t>", then one
//               "map <edge> <quotient-edge>" per parent edge
// Serialization is canonical: parse(serialize(x)) == x and
// serialize(parse(s)) == s for comment-free canonical input.

namespace nzflow::io {

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

PermGroup read_group(std::istream& in, std::size_t order_cap = kDefaultOrderCap);
void write_group(std::ostream& out, const PermGroup& g);

Flow read_flow(std::istream& in);
void write_flow(std::ostream& out, const Flow& f);

VertexPartition read_partition(std::istream& in, int vertex_count);
void write_partition(std::ostream& out, const VertexPartition& p);

void write_certificate(std::ostream& out, const MulticoverCert& cert);

void write_trace(std::ostream& out, const PipelineTrace& trace);

// File conveniences; throw Errc::parse_error on unreadable paths.
Graph load_graph(const std::string& path);
PermGroup load_group(const std::string& path, std::size_t order_cap = kDefaultOrderCap);
Flow load_flow(const std::string& path);
VertexPartition load_partition(const std::string& path, int vertex_count);
void save(const std::string& path, const std::string& contents);

std::string to_string(const Graph& g);
std::string to_string(const PermGroup& g);
std::string to_string(const Flow& f);
std::string to_string(const VertexPartition& p);

}  // namespace nzflow::io
