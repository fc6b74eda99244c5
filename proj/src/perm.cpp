#include "nzflow/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace nzflow {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int img : images_) {
    if (img < 0 || img >= n || seen[img]) {
      throw std::invalid_argument("permutation images must be a bijection on 0..n-1");
    }
    seen[img] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::from_cycles(int degree,
                       std::initializer_list<std::initializer_list<int>> cycles) {
  Perm p = identity(degree);
  for (const auto& cycle : cycles) {
    const auto* data = cycle.begin();
    const auto len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      int from = data[i];
      int to = data[(i + 1) % len];
      if (from < 0 || from >= degree || p.images_[from] != from) {
        throw std::invalid_argument("bad cycle notation");
      }
      p.images_[from] = to;
    }
  }
  return Perm(p.images_);  // revalidates
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv), Unchecked{});
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  std::vector<int> images(g.images_.size());
  for (int i = 0; i < g.degree(); ++i) images[i] = h.images_[g.images_[i]];
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm commutator(const Perm& x, const Perm& y) {
  // image(i) = y(x(y^-1(x^-1(i)))), fused into one pass
  const Perm ix = x.inverse();
  const Perm iy = y.inverse();
  std::vector<int> images(x.images_.size());
  for (int i = 0; i < x.degree(); ++i) {
    images[i] = y.images_[x.images_[iy.images_[ix.images_[i]]]];
  }
  return Perm(std::move(images), Perm::Unchecked{});
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (int img : p.images()) {
    h ^= static_cast<std::size_t>(img);
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_cycle_string(const Perm& p) {
  if (p.is_identity()) return "()";
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    int v = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(v);
      seen[v] = 1;
      v = p(v);
      first = false;
    } while (v != start);
    out += ')';
  }
  return out;
}

}  // namespace nzflow
