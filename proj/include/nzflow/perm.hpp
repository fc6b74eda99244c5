#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nzflow {

// A bijection on {0,...,n-1}, stored as its image sequence: images()[i] is
// the image of point i. Composition is left-to-right, so that applying g*h
// to a point equals applying g first and h second. This matches the action
// convention alpha^(gh) = (alpha^g)^h used throughout.
class Perm {
 public:
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  // Cycle-notation convenience: Perm::from_cycles(5, {{0, 1, 2, 3, 4}}) maps
  // 0->1->2->3->4->0. Points not mentioned are fixed.
  static Perm from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Perm operator*(const Perm& g, const Perm& h);
  friend Perm commutator(const Perm& x, const Perm& y);
};

// (g*h)(p) == h(g(p)): g acts first.
Perm operator*(const Perm& g, const Perm& h);

// x^-1 y^-1 x y, composed left-to-right.
Perm commutator(const Perm& x, const Perm& y);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Disjoint-cycle rendering for diagnostics, e.g. "(0 1 2)(3 4)".
std::string to_cycle_string(const Perm& p);

}  // namespace nzflow
