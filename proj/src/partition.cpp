#include "nzflow/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace nzflow {

VertexPartition::VertexPartition(int vertex_count, std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)), block_of_(vertex_count, -1) {
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int b = 0; b < block_count(); ++b) {
    for (int v : blocks_[b]) {
      if (v < 0 || v >= vertex_count || block_of_[v] != -1) {
        throw std::invalid_argument("partition blocks must be disjoint subsets of 0..n-1");
      }
      block_of_[v] = b;
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (block_of_[v] == -1) {
      throw std::invalid_argument("partition blocks must cover every vertex");
    }
  }
}

VertexPartition VertexPartition::singletons(int vertex_count) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(vertex_count);
  for (int v = 0; v < vertex_count; ++v) blocks.push_back({v});
  return VertexPartition(vertex_count, std::move(blocks));
}

}  // namespace nzflow
