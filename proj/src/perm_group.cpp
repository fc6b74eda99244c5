#include "nzflow/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nzflow/error.hpp"
#include "nzflow/graph.hpp"

namespace nzflow {

std::vector<Perm> enumerate_elements(const std::vector<Perm>& generators, std::size_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("generator list must be nonempty");
  }
  const int degree = generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generators must share one degree");
    }
  }

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements;
  std::deque<Perm> frontier;

  Perm id = Perm::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(std::move(id));

  while (!frontier.empty()) {
    Perm current = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : generators) {
      Perm next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          fail(Errc::order_cap_exceeded,
               "group closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return elements;
}

struct PermGroup::Enumeration {
  std::once_flag once;
  std::vector<Perm> elements;
  std::unordered_set<Perm, PermHash> element_set;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t order_cap)
    : degree_(degree),
      generators_(std::move(generators)),
      cap_(order_cap),
      enumeration_(std::make_shared<Enumeration>()) {
  if (generators_.empty()) {
    throw std::invalid_argument("a permutation group needs at least one generator");
  }
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("generator degree does not match group degree");
    }
  }
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Perm::identity(degree)});
}

const std::vector<Perm>& PermGroup::elements() const {
  std::call_once(enumeration_->once, [this] {
    enumeration_->elements = enumerate_elements(generators_, cap_);
    enumeration_->element_set.insert(enumeration_->elements.begin(),
                                     enumeration_->elements.end());
  });
  return enumeration_->elements;
}

bool PermGroup::contains(const Perm& p) const {
  elements();
  return enumeration_->element_set.contains(p);
}

PermGroup derived_subgroup(const PermGroup& g) {
  const std::vector<Perm>& elems = g.elements();
  std::vector<Perm> inverses;
  inverses.reserve(elems.size());
  for (const Perm& e : elems) inverses.push_back(e.inverse());

  const int n = g.degree();
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> commutator_gens;
  std::vector<int> img(n);
  for (std::size_t xi = 0; xi < elems.size(); ++xi) {
    const std::vector<int>& x = elems[xi].images();
    const std::vector<int>& ix = inverses[xi].images();
    for (std::size_t yi = 0; yi < elems.size(); ++yi) {
      const std::vector<int>& y = elems[yi].images();
      const std::vector<int>& iy = inverses[yi].images();
      // x^-1 y^-1 x y applied left-to-right
      for (int i = 0; i < n; ++i) img[i] = y[x[iy[ix[i]]]];
      Perm c(img);
      if (seen.insert(c).second) commutator_gens.push_back(std::move(c));
    }
  }
  if (commutator_gens.empty()) commutator_gens.push_back(Perm::identity(n));
  return PermGroup(n, std::move(commutator_gens), g.order_cap());
}

const PermGroup& DerivedSeries::last_nontrivial() const {
  if (terms.empty() || terms.front().order() == 1) {
    throw std::logic_error("derived series of the trivial group has no nontrivial term");
  }
  const PermGroup& last = terms.back();
  return last.order() > 1 ? last : terms[terms.size() - 2];
}

DerivedSeries derived_series(const PermGroup& g) {
  DerivedSeries series;
  series.terms.push_back(g);
  while (series.terms.back().order() > 1) {
    PermGroup next = derived_subgroup(series.terms.back());
    if (next.order() == series.terms.back().order()) {
      // perfect nontrivial term: the series has stabilized
      series.solvable = false;
      series.derived_length = -1;
      return series;
    }
    series.terms.push_back(std::move(next));
  }
  series.solvable = true;
  series.derived_length = static_cast<int>(series.terms.size()) - 1;
  return series;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

VertexPartition orbits(const PermGroup& g) {
  const int n = g.degree();
  std::vector<char> visited(n, 0);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit{start};
    visited[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& gen : g.generators()) {
        int image = gen(orbit[head]);
        if (!visited[image]) {
          visited[image] = 1;
          orbit.push_back(image);
        }
      }
    }
    blocks.push_back(std::move(orbit));
  }
  return VertexPartition(n, std::move(blocks));
}

bool is_transitive(const PermGroup& g) { return orbits(g).block_count() == 1; }

bool is_regular_action(const PermGroup& g) {
  return is_transitive(g) && g.order() == static_cast<std::size_t>(g.degree());
}

namespace {

std::vector<std::pair<int, int>> sorted_edge_multiset(const Graph& gamma) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(gamma.edge_count());
  for (auto [u, v] : gamma.edges()) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool preserves_graph(const PermGroup& g, const Graph& gamma) {
  if (g.degree() != gamma.vertex_count()) return false;
  const auto reference = sorted_edge_multiset(gamma);
  for (const Perm& gen : g.generators()) {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(reference.size());
    for (auto [u, v] : gamma.edges()) {
      int a = gen(u), b = gen(v);
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != reference) return false;
  }
  return true;
}

bool is_arc_transitive(const PermGroup& g, const Graph& gamma) {
  if (gamma.edge_count() == 0) {
    throw std::invalid_argument("arc-transitivity needs at least one edge");
  }
  if (!preserves_graph(g, gamma)) {
    fail(Errc::not_automorphism_group, "a generator does not preserve the edge multiset");
  }
  if (!is_transitive(g)) return false;

  // Edge multiplicity per ordered pair, so parallel arcs are counted.
  const long long n = gamma.vertex_count();
  std::unordered_map<long long, int> multiplicity;
  for (auto [u, v] : gamma.edges()) {
    multiplicity[u * n + v] += 1;
    multiplicity[v * n + u] += 1;
  }

  auto [u0, v0] = gamma.endpoints(0);
  std::unordered_set<long long> orbit{u0 * n + v0};
  std::vector<std::pair<int, int>> frontier{{u0, v0}};
  long long covered = multiplicity.at(u0 * n + v0);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    auto [u, v] = frontier[head];
    for (const Perm& gen : g.generators()) {
      int a = gen(u), b = gen(v);
      if (orbit.insert(a * n + b).second) {
        frontier.emplace_back(a, b);
        covered += multiplicity.at(a * n + b);
      }
    }
  }
  return covered == 2LL * gamma.edge_count();
}

}  // namespace nzflow
