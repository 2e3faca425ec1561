#include "locus/rmq.hpp"

#include <algorithm>
#include <cassert>


namespace locus {

RangeMinIndex::RangeMinIndex(std::span<const Pos> values) {
  const auto n = static_cast<Pos>(values.size());
  masks_.resize(n);
  const Pos blocks = (n + 63) / 64;
  std::vector<Pos> block_min(blocks);
  for (Pos b = 0; b < blocks; ++b) {
    const Pos begin = b * 64;
    const Pos end = std::min<Pos>(begin + 64, n);
    std::uint64_t stack = 0;
    for (Pos i = begin; i < end; ++i) {
      // Pop strictly larger values so that ties keep the leftmost position.
      while (stack != 0) {
        const Pos top = begin + 63 - static_cast<Pos>(std::countl_zero(stack));
        if (values[top] <= values[i]) break;
        stack &= ~(std::uint64_t{1} << (top - begin));
      }
      stack |= std::uint64_t{1} << (i - begin);
      masks_[i] = stack;
    }
    block_min[b] = begin + static_cast<Pos>(std::countr_zero(masks_[end - 1]));
  }
  table_.push_back(std::move(block_min));
  for (Pos len = 2; len <= blocks; len *= 2) {
    const auto& prev = table_.back();
    std::vector<Pos> row(blocks - len + 1);
    for (Pos i = 0; i + len <= blocks; ++i) row[i] = pick(values, prev[i], prev[i + len / 2]);
    table_.push_back(std::move(row));
  }
}

std::uint64_t RangeMinIndex::memory_words() const {
  std::uint64_t words = masks_.size();
  for (const auto& row : table_) words += (row.size() + 1) / 2;
  return words;
}

LevelAncestor::LevelAncestor(std::span<const NodeId> parent) {
  const auto n = static_cast<NodeId>(parent.size());
  std::vector<std::uint32_t> child_begin(n + 1, 0);
  NodeId root = kNoNode;
  for (NodeId v = 0; v < n; ++v) {
    if (parent[v] == kNoNode) {
      root = v;
    } else {
      ++child_begin[parent[v] + 1];
    }
  }
  assert(root != kNoNode);
  for (NodeId v = 0; v < n; ++v) child_begin[v + 1] += child_begin[v];
  std::vector<NodeId> children(n == 0 ? 0 : n - 1);
  {
    std::vector<std::uint32_t> fill(child_begin.begin(), child_begin.end() - 1);
    for (NodeId v = 0; v < n; ++v) {
      if (parent[v] != kNoNode) children[fill[parent[v]]++] = v;
    }
  }

  // BFS order gives depths top-down and heights bottom-up.
  std::vector<NodeId> order;
  order.reserve(n);
  order.push_back(root);
  depth_.assign(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId v = order[i];
    for (std::uint32_t c = child_begin[v]; c < child_begin[v + 1]; ++c) {
      depth_[children[c]] = depth_[v] + 1;
      order.push_back(children[c]);
    }
  }
  std::vector<std::uint32_t> height(n, 0);
  std::vector<NodeId> long_child(n, kNoNode);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    for (std::uint32_t c = child_begin[v]; c < child_begin[v + 1]; ++c) {
      const NodeId u = children[c];
      if (long_child[v] == kNoNode || height[u] + 1 > height[v]) {
        height[v] = height[u] + 1;
        long_child[v] = u;
      }
    }
  }

  // Ladders: each long path of h nodes, extended upward by up to h ancestors.
  anchor_.assign(n, kNoNode);
  ladder_pos_.assign(n, 0);
  ladder_.reserve(2 * static_cast<std::size_t>(n));
  std::vector<NodeId> path;
  for (const NodeId top : order) {
    if (top != root && long_child[parent[top]] == top) continue;
    path.clear();
    for (NodeId v = top; v != kNoNode; v = long_child[v]) path.push_back(v);
    const auto h = static_cast<std::uint32_t>(path.size());
    const std::uint32_t ext = std::min(h, depth_[top]);
    const auto base = static_cast<std::uint32_t>(ladder_.size());
    ladder_.resize(ladder_.size() + ext);
    NodeId up = top;
    for (std::uint32_t i = 0; i < ext; ++i) {
      up = parent[up];
      ladder_[base + ext - 1 - i] = up;
    }
    for (const NodeId v : path) {
      ladder_pos_[v] = static_cast<std::uint32_t>(ladder_.size());
      anchor_[v] = path.back();
      ladder_.push_back(v);
    }
  }

  // Jump pointers at leaves from an explicit root path during DFS.
  jump_begin_.assign(n, 0);
  std::vector<NodeId> root_path;
  std::vector<std::uint32_t> next_child;
  root_path.push_back(root);
  next_child.push_back(child_begin[root]);
  auto record_leaf = [&](NodeId leaf) {
    jump_begin_[leaf] = static_cast<std::uint32_t>(jumps_.size());
    const auto d = static_cast<std::uint32_t>(root_path.size() - 1);
    for (std::uint32_t step = 1; step <= d; step *= 2) jumps_.push_back(root_path[d - step]);
  };
  if (child_begin[root] == child_begin[root + 1]) record_leaf(root);
  while (!root_path.empty()) {
    const NodeId v = root_path.back();
    if (next_child.back() == child_begin[v + 1]) {
      root_path.pop_back();
      next_child.pop_back();
      continue;
    }
    const NodeId c = children[next_child.back()++];
    root_path.push_back(c);
    next_child.push_back(child_begin[c]);
    if (child_begin[c] == child_begin[c + 1]) record_leaf(c);
  }
}

std::uint64_t LevelAncestor::memory_words() const {
  return (depth_.size() + anchor_.size() + ladder_pos_.size() + ladder_.size() + jump_begin_.size() + jumps_.size()) / 2;
}

}  // namespace locus
