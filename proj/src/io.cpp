#include "nzflow/io.hpp"

#include <fstream>
#include <sstream>

#include "nzflow/error.hpp"

namespace nzflow::io {

namespace {

// Lines of keyword-plus-integers records; '#' starts a comment, blank lines
// are skipped.
struct Record {
  std::string keyword;
  std::vector<long long> fields;
};

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    Record rec;
    if (!(ss >> rec.keyword)) continue;
    long long value = 0;
    while (ss >> value) rec.fields.push_back(value);
    std::string trailing;
    if (ss.clear(), ss >> trailing) {
      fail(Errc::parse_error,
           "line " + std::to_string(lineno) + ": unexpected token '" + trailing + "'");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

[[noreturn]] void bad_record(const std::string& what, const Record& rec) {
  fail(Errc::parse_error, what + " (record '" + rec.keyword + "')");
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto records = read_records(in);
  if (records.empty() || records.front().keyword != "v" || records.front().fields.size() != 1) {
    fail(Errc::parse_error, "graph file must start with 'v <n>'");
  }
  const int n = static_cast<int>(records.front().fields[0]);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& rec = records[i];
    if (rec.keyword != "e" || rec.fields.size() != 2) bad_record("expected 'e <u> <v>'", rec);
    edges.emplace_back(static_cast<int>(rec.fields[0]), static_cast<int>(rec.fields[1]));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    fail(Errc::parse_error, e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "v " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

PermGroup read_group(std::istream& in, std::size_t order_cap) {
  auto records = read_records(in);
  if (records.empty() || records.front().keyword != "deg" ||
      records.front().fields.size() != 1) {
    fail(Errc::parse_error, "group file must start with 'deg <n>'");
  }
  const int degree = static_cast<int>(records.front().fields[0]);
  std::vector<Perm> generators;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& rec = records[i];
    if (rec.keyword != "gen" || static_cast<int>(rec.fields.size()) != degree) {
      bad_record("expected 'gen' with " + std::to_string(degree) + " images", rec);
    }
    std::vector<int> images(rec.fields.begin(), rec.fields.end());
    try {
      generators.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      fail(Errc::parse_error, e.what());
    }
  }
  if (generators.empty()) fail(Errc::parse_error, "group file has no generators");
  return PermGroup(degree, std::move(generators), order_cap);
}

void write_group(std::ostream& out, const PermGroup& g) {
  out << "deg " << g.degree() << "\n";
  for (const Perm& gen : g.generators()) {
    out << "gen";
    for (int img : gen.images()) out << " " << img;
    out << "\n";
  }
}

Flow read_flow(std::istream& in) {
  auto records = read_records(in);
  if (records.empty() || records.front().keyword != "k" || records.front().fields.size() != 1) {
    fail(Errc::parse_error, "flow file must start with 'k <k>'");
  }
  Flow flow;
  flow.k = static_cast<int>(records.front().fields[0]);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& rec = records[i];
    if (rec.keyword != "f" || rec.fields.size() != 3) {
      bad_record("expected 'f <tail> <head> <value>'", rec);
    }
    flow.orientation.dir.emplace_back(static_cast<int>(rec.fields[0]),
                                      static_cast<int>(rec.fields[1]));
    flow.values.push_back(static_cast<int>(rec.fields[2]));
  }
  return flow;
}

void write_flow(std::ostream& out, const Flow& f) {
  out << "k " << f.k << "\n";
  for (std::size_t e = 0; e < f.values.size(); ++e) {
    out << "f " << f.orientation.dir[e].first << " " << f.orientation.dir[e].second << " "
        << f.values[e] << "\n";
  }
}

VertexPartition read_partition(std::istream& in, int vertex_count) {
  auto records = read_records(in);
  std::vector<std::vector<int>> blocks;
  for (const Record& rec : records) {
    if (rec.keyword != "b" || rec.fields.empty()) bad_record("expected 'b <v1> ...'", rec);
    blocks.emplace_back(rec.fields.begin(), rec.fields.end());
  }
  try {
    return VertexPartition(vertex_count, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    fail(Errc::parse_error, e.what());
  }
}

void write_partition(std::ostream& out, const VertexPartition& p) {
  for (const auto& block : p.blocks()) {
    out << "b";
    for (int v : block) out << " " << v;
    out << "\n";
  }
}

void write_certificate(std::ostream& out, const MulticoverCert& cert) {
  write_graph(out, cert.quotient);
  out << "t " << cert.t << "\n";
  for (std::size_t e = 0; e < cert.edge_map.size(); ++e) {
    out << "map " << e << " " << cert.edge_map[e] << "\n";
  }
}

void write_trace(std::ostream& out, const PipelineTrace& trace) {
  out << trace.to_string();
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

PermGroup load_group(const std::string& path, std::size_t order_cap) {
  auto in = open_input(path);
  return read_group(in, order_cap);
}

Flow load_flow(const std::string& path) {
  auto in = open_input(path);
  return read_flow(in);
}

VertexPartition load_partition(const std::string& path, int vertex_count) {
  auto in = open_input(path);
  return read_partition(in, vertex_count);
}

void save(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << contents;
}

std::string to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

std::string to_string(const PermGroup& g) {
  std::ostringstream ss;
  write_group(ss, g);
  return ss.str();
}

std::string to_string(const Flow& f) {
  std::ostringstream ss;
  write_flow(ss, f);
  return ss.str();
}

std::string to_string(const VertexPartition& p) {
  std::ostringstream ss;
  write_partition(ss, p);
  return ss.str();
}

}  // namespace nzflow::io
