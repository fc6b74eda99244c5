#include "nzflow/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nzflow::families {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both parts nonempty");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges));
}

Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (j - i != 3) edges.emplace_back(i, j);
    }
  }
  return Graph(6, std::move(edges));
}

namespace {

std::vector<std::pair<int, int>> two_subsets_of_five() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  }
  return subsets;
}

}  // namespace

Graph petersen() {
  auto subsets = two_subsets_of_five();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(10, std::move(edges));
}

namespace {

void validate_chords(int n, const std::vector<int>& chords) {
  if (n < 2) throw std::invalid_argument("circulant needs n >= 2");
  std::vector<int> sorted = chords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate chord");
  }
  for (int c : chords) {
    if (c < 1 || 2 * c > n) {
      throw std::invalid_argument("chords must satisfy 1 <= c <= n/2");
    }
  }
}

}  // namespace

Graph circulant(int n, const std::vector<int>& chords) {
  validate_chords(n, chords);
  std::vector<std::pair<int, int>> edges;
  for (int c : chords) {
    for (int i = 0; i < n; ++i) {
      int j = (i + c) % n;
      if (2 * c == n && i >= n / 2) continue;  // involution chord: one edge per pair
      edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

struct TupleGroup {
  std::vector<int> mods;

  int size() const {
    int prod = 1;
    for (int m : mods) prod *= m;
    return prod;
  }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> out(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) out[i] = (a[i] + b[i]) % mods[i];
    return out;
  }
  std::vector<int> negate(const std::vector<int>& a) const {
    std::vector<int> out(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) out[i] = (mods[i] - a[i]) % mods[i];
    return out;
  }
  bool is_zero(const std::vector<int>& a) const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }
};

void validate_connection(const TupleGroup& grp, const std::vector<std::vector<int>>& connection) {
  if (connection.empty()) throw std::invalid_argument("empty connection set");
  std::vector<std::vector<int>> seen;
  for (const auto& s : connection) {
    if (s.size() != grp.mods.size()) {
      throw std::invalid_argument("connection element arity does not match the group");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= grp.mods[i]) {
        throw std::invalid_argument("connection element out of range");
      }
    }
    if (grp.is_zero(s)) throw std::invalid_argument("connection set cannot contain zero");
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
      throw std::invalid_argument("duplicate connection element");
    }
    seen.push_back(s);
  }
  // symmetry is validated, not repaired
  for (const auto& s : connection) {
    auto neg = grp.negate(s);
    if (std::find(connection.begin(), connection.end(), neg) == connection.end()) {
      throw std::invalid_argument("connection set is not closed under inverse");
    }
  }
}

// Vertex order: breadth-first from the identity, adding connection elements
// in input order. Deterministic, and identical for graph and group emission.
std::vector<std::vector<int>> bfs_vertex_order(const TupleGroup& grp,
                                               const std::vector<std::vector<int>>& connection) {
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> order;
  std::vector<int> zero(grp.mods.size(), 0);
  index[zero] = 0;
  order.push_back(zero);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : connection) {
      auto next = grp.add(order[head], s);
      if (index.try_emplace(next, static_cast<int>(order.size())).second) {
        order.push_back(next);
      }
    }
  }
  if (static_cast<int>(order.size()) != grp.size()) {
    throw std::invalid_argument("connection set does not generate the group");
  }
  return order;
}

}  // namespace

Graph cayley_abelian(const std::vector<int>& mods,
                     const std::vector<std::vector<int>>& connection) {
  for (int m : mods) {
    if (m < 2) throw std::invalid_argument("moduli must be at least 2");
  }
  TupleGroup grp{mods};
  validate_connection(grp, connection);
  auto order = bfs_vertex_order(grp, connection);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& s : connection) {
      int j = index.at(grp.add(order[i], s));
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(grp.size(), std::move(edges));
}

PermGroup cayley_translation_group(const std::vector<int>& mods,
                                   const std::vector<std::vector<int>>& connection) {
  TupleGroup grp{mods};
  validate_connection(grp, connection);
  auto order = bfs_vertex_order(grp, connection);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  std::vector<Perm> gens;
  for (const auto& s : connection) {
    std::vector<int> images(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      images[i] = index.at(grp.add(order[i], s));
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(grp.size(), std::move(gens));
}

PermGroup circulant_symmetry_group(int n, const std::vector<int>& chords) {
  validate_chords(n, chords);
  std::vector<char> in_set(n, 0);
  for (int c : chords) {
    in_set[c] = 1;
    in_set[(n - c) % n] = 1;
  }

  std::vector<Perm> gens;
  {
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    gens.emplace_back(std::move(shift));
  }
  for (int m = 2; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    bool fixes = true;
    for (int c = 1; c < n; ++c) {
      if (in_set[c] != in_set[static_cast<int>((static_cast<long long>(m) * c) % n)]) {
        fixes = false;
        break;
      }
    }
    if (!fixes) continue;
    std::vector<int> mult(n);
    for (int i = 0; i < n; ++i) mult[i] = static_cast<int>((static_cast<long long>(m) * i) % n);
    gens.emplace_back(std::move(mult));
  }
  return PermGroup(n, std::move(gens));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PermGroup complete_affine_group(int p) {
  if (!is_prime(p)) throw std::invalid_argument("AGL(1,p) needs p prime");
  std::vector<int> shift(p);
  for (int i = 0; i < p; ++i) shift[i] = (i + 1) % p;
  if (p == 2) return PermGroup(2, {Perm(std::move(shift))});

  int root = 0;
  for (int r = 2; r < p; ++r) {
    int x = r % p;
    int order = 1;
    while (x != 1) {
      x = static_cast<int>((static_cast<long long>(x) * r) % p);
      ++order;
    }
    if (order == p - 1) {
      root = r;
      break;
    }
  }
  std::vector<int> mult(p);
  for (int i = 0; i < p; ++i) mult[i] = static_cast<int>((static_cast<long long>(root) * i) % p);
  return PermGroup(p, {Perm(std::move(shift)), Perm(std::move(mult))});
}

PermGroup complete_bipartite_group(int a) {
  if (a < 1) throw std::invalid_argument("part size must be positive");
  const int n = 2 * a;
  std::vector<int> shift_a(n), shift_b(n), swap(n);
  for (int i = 0; i < a; ++i) {
    shift_a[i] = (i + 1) % a;
    shift_a[a + i] = a + i;
    shift_b[i] = i;
    shift_b[a + i] = a + (i + 1) % a;
    swap[i] = a + i;
    swap[a + i] = i;
  }
  return PermGroup(n, {Perm(std::move(shift_a)), Perm(std::move(shift_b)), Perm(std::move(swap))});
}

PermGroup petersen_s5_group() {
  auto subsets = two_subsets_of_five();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

  auto induced = [&](const std::vector<int>& base_images) {
    std::vector<int> images(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      int a = base_images[subsets[i].first];
      int b = base_images[subsets[i].second];
      images[i] = index.at({std::min(a, b), std::max(a, b)});
    }
    return Perm(std::move(images));
  };
  return PermGroup(10, {induced({1, 0, 2, 3, 4}), induced({1, 2, 3, 4, 0})});
}

PermGroup octahedron_group() {
  // vertices 0..5, antipodal pairs (0,3),(1,4),(2,5): permute the pairs and
  // flip within a pair
  return PermGroup(6, {
                          Perm::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}),
                          Perm::from_cycles(6, {{0, 1}, {3, 4}}),
                          Perm::from_cycles(6, {{0, 3}}),
                      });
}

}  // namespace nzflow::families
