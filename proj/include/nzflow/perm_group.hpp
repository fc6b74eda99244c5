#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "nzflow/partition.hpp"
#include "nzflow/perm.hpp"

namespace nzflow {

class Graph;

inline constexpr std::size_t kDefaultOrderCap = 2'000'000;

// Closure of the generators under composition, including the identity.
// Breadth-first products in generator order, so the element sequence is
// deterministic. Throws Errc::order_cap_exceeded once the closure grows
// past `cap`.
std::vector<Perm> enumerate_elements(const std::vector<Perm>& generators,
                                     std::size_t cap = kDefaultOrderCap);

// A permutation group on {0,...,degree-1} given by a nonempty generator
// list. Immutable after construction. The element set is computed lazily,
// exactly once (thread-safe), and shared between copies.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators, std::size_t order_cap = kDefaultOrderCap);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order_cap() const { return cap_; }

  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }

 private:
  struct Enumeration;

  int degree_;
  std::vector<Perm> generators_;
  std::size_t cap_;
  std::shared_ptr<Enumeration> enumeration_;
};

// [G,G]: the group generated by the commutators of all element pairs of G.
// That set is closed under conjugation as a whole, so no separate normal
// closure is needed.
PermGroup derived_subgroup(const PermGroup& g);

struct DerivedSeries {
  // G = terms[0] > terms[1] > ...; orders strictly decrease. When solvable,
  // the last term is trivial; otherwise iteration stopped at a nontrivial
  // perfect term.
  std::vector<PermGroup> terms;
  bool solvable = false;
  int derived_length = -1;  // defined only when solvable

  const PermGroup& last_nontrivial() const;
};

DerivedSeries derived_series(const PermGroup& g);

bool is_abelian(const PermGroup& g);

// G-orbits on {0,...,degree-1}, in canonical partition order.
VertexPartition orbits(const PermGroup& g);

bool is_transitive(const PermGroup& g);
bool is_regular_action(const PermGroup& g);

// True iff every generator maps the edge multiset of `gamma` onto itself.
bool preserves_graph(const PermGroup& g, const Graph& gamma);

// Vertex-transitive and transitive on arcs (ordered adjacent pairs, counted
// with edge multiplicity). Throws Errc::not_automorphism_group if some
// generator fails edge preservation; requires at least one edge.
bool is_arc_transitive(const PermGroup& g, const Graph& gamma);

}  // namespace nzflow
