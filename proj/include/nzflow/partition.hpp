#pragma once

#include <vector>

namespace nzflow {

// Disjoint nonempty blocks of vertices covering {0,...,n-1}. Canonical form:
// blocks ordered by their minimum element, elements ascending within a block.
// The constructor canonicalizes, so two partitions of the same set compare
// equal regardless of input order.
class VertexPartition {
 public:
  VertexPartition(int vertex_count, std::vector<std::vector<int>> blocks);

  static VertexPartition singletons(int vertex_count);

  int vertex_count() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_[b]; }
  int block_of(int v) const { return block_of_[v]; }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace nzflow
