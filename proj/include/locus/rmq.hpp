#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "locus/types.hpp"

namespace locus {

/// Constant-time leftmost-argmin over an immutable array in O(n) words: a
/// sparse table over 64-element blocks plus, per element, a 64-bit mask of
/// the in-block monotone stack.
class RangeMinIndex {
 public:
  RangeMinIndex() = default;
  explicit RangeMinIndex(std::span<const Pos> values);

  /// Leftmost position of the minimum in values[l..r], l <= r.
  Pos argmin(std::span<const Pos> values, Pos l, Pos r) const {
    const Pos bl = l >> 6;
    const Pos br = r >> 6;
    if (bl == br) return in_block(l, r);
    Pos best = in_block(l, (bl << 6) | 63);
    if (bl + 1 < br) best = pick(values, best, block_argmin(values, bl + 1, br - 1));
    return pick(values, best, in_block(br << 6, r));
  }

  std::uint64_t memory_words() const;

 private:
  static Pos pick(std::span<const Pos> values, Pos a, Pos b) { return values[b] < values[a] ? b : a; }

  Pos in_block(Pos l, Pos r) const {
    const std::uint64_t m = masks_[r] & (~std::uint64_t{0} << (l & 63));
    return (r & ~Pos{63}) + static_cast<Pos>(std::countr_zero(m));
  }

  Pos block_argmin(std::span<const Pos> values, Pos a, Pos b) const {
    const unsigned level = std::bit_width(static_cast<std::uint32_t>(b - a + 1)) - 1;
    const auto& row = table_[level];
    return pick(values, row[a], row[b + 1 - (Pos{1} << level)]);
  }

  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<Pos>> table_;
};

/// Level-ancestor queries in O(1): long-path decomposition with doubled
/// ladders, plus jump pointers stored only at leaves.
class LevelAncestor {
 public:
  LevelAncestor() = default;
  /// parent[root] == kNoNode; every other entry is a node id.
  explicit LevelAncestor(std::span<const NodeId> parent);

  std::uint32_t depth(NodeId v) const { return depth_[v]; }

  /// The ancestor at distance d from v (d = 0 gives v). d <= depth(v).
  NodeId ancestor(NodeId v, std::uint32_t d) const {
    if (d == 0) return v;
    const NodeId leaf = anchor_[v];
    const std::uint32_t k = depth_[leaf] - depth_[v] + d;
    const unsigned level = std::bit_width(k) - 1;
    const NodeId x = jumps_[jump_begin_[leaf] + level];
    return ladder_[ladder_pos_[x] - (k - (std::uint32_t{1} << level))];
  }

  std::uint64_t memory_words() const;

 private:
  std::vector<std::uint32_t> depth_;
  std::vector<NodeId> anchor_;           // leaf at the bottom of v's long path
  std::vector<std::uint32_t> ladder_pos_;  // index of v's entry in ladder_
  std::vector<NodeId> ladder_;
  std::vector<std::uint32_t> jump_begin_;  // per leaf, into jumps_
  std::vector<NodeId> jumps_;              // jumps_[begin + i] = ancestor at distance 2^i
};

}  // namespace locus
