#pragma once

#include <optional>
#include <vector>

#include "nzflow/graph.hpp"
#include "nzflow/perm_group.hpp"

namespace nzflow::families {

Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

// K_{2,2,2}: vertices 0..5, antipodal pairs (0,3), (1,4), (2,5).
Graph octahedron();

// Kneser labeling: vertices are the 2-subsets of {0..4} in lexicographic
// order ({0,1}=0, {0,2}=1, ..., {3,4}=9); disjoint pairs are adjacent.
Graph petersen();

// Chords are canonical half-representatives: 1 <= c <= n/2, distinct.
// Each c < n/2 contributes the symmetric pair {+-c}; c = n/2 is the
// involution chord.
Graph circulant(int n, const std::vector<int>& chords);

// Cayley graph on Z_{mods[0]} x ... x Z_{mods[k-1]} with an inverse-closed
// connection set (validated, not fixed up). Vertex order is the
// breadth-first enumeration of group elements from the identity following
// connection elements in order. Requires the connection set to generate the
// whole group.
Graph cayley_abelian(const std::vector<int>& mods,
                     const std::vector<std::vector<int>>& connection);

// Groups emitted alongside generated graphs.

// Z_n rotation plus every unit multiplier fixing the chord set; the rotation
// subgroup acts regularly, and the full group is arc-transitive whenever the
// multipliers act transitively on the symmetric connection set.
PermGroup circulant_symmetry_group(int n, const std::vector<int>& chords);

// Translations by the connection elements: the regular subgroup realizing
// the Cayley structure.
PermGroup cayley_translation_group(const std::vector<int>& mods,
                                   const std::vector<std::vector<int>>& connection);

// AGL(1,p) acting on K_p, p prime: x -> x+1 and x -> rx for a primitive
// root r. Sharply 2-transitive, solvable.
PermGroup complete_affine_group(int p);

// The order-2a^2 group <shift A, shift B, swap> on K_{a,a}.
PermGroup complete_bipartite_group(int a);

// S5 acting on the 2-subsets (the petersen() labeling).
PermGroup petersen_s5_group();

// Signed permutations of the three antipodal pairs, order 48.
PermGroup octahedron_group();

bool is_prime(int n);

}  // namespace nzflow::families
