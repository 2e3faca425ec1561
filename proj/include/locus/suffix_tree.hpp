#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "locus/rmq.hpp"
#include "locus/text_index.hpp"
#include "locus/types.hpp"

namespace locus {

class Writer;
class Reader;

/// Compacted trie of all suffixes, built from SA + LCP by a stack sweep.
///
/// Leaves are numbered by suffix rank (leaf i holds suffix sa[i]); internal
/// nodes take ids n.. in creation order, the root being n. Every node covers
/// a contiguous rank interval [lo, hi]. Children are stored in lexicographic
/// order. LCA queries reduce to a range minimum over the LCP array plus a
/// per-rank table of the node that each LCP entry belongs to.
class SuffixTree {
 public:
  SuffixTree() = default;
  explicit SuffixTree(const SuffixArrayBundle& b);

  Pos leaf_count() const { return n_; }
  NodeId node_count() const { return static_cast<NodeId>(parent_.size()); }
  NodeId root() const { return n_; }
  bool is_leaf(NodeId v) const { return v < n_; }
  NodeId leaf_of_rank(Pos i) const { return i; }

  NodeId parent(NodeId v) const { return parent_[v]; }
  Pos string_depth(NodeId v) const { return depth_[v]; }
  Pos lo(NodeId v) const { return is_leaf(v) ? v : lo_[v - n_]; }
  Pos hi(NodeId v) const { return is_leaf(v) ? v : hi_[v - n_]; }
  std::span<const NodeId> children(NodeId v) const {
    if (is_leaf(v)) return {};
    const std::uint32_t k = v - n_;
    return std::span<const NodeId>(children_).subspan(child_begin_[k], child_begin_[k + 1] - child_begin_[k]);
  }
  /// The internal node whose adjacent child pair is separated at rank i >= 1,
  /// i.e. lca(leaf i-1, leaf i).
  NodeId node_of_lcp(Pos i) const { return lcp_node_[i]; }

  bool is_ancestor(NodeId a, NodeId v) const { return lo(a) <= lo(v) && hi(v) <= hi(a); }

  NodeId lca(NodeId u, NodeId v) const {
    if (is_ancestor(u, v)) return u;
    if (is_ancestor(v, u)) return v;
    Pos i = lo(u);
    Pos j = lo(v);
    if (i > j) std::swap(i, j);
    return lcp_node_[rmq_.argmin(lcp_, i + 1, j)];
  }

  /// lcp of the suffixes at ranks i and j.
  Pos lcp_of_ranks(Pos i, Pos j) const {
    if (i == j) return depth_[i];
    if (i > j) std::swap(i, j);
    return lcp_[rmq_.argmin(lcp_, i + 1, j)];
  }

  std::uint64_t memory_words() const;

  void save(Writer& w) const;
  static SuffixTree load(Reader& r, const SuffixArrayBundle& b);

 private:
  void build_lca();

  Pos n_ = 0;
  std::vector<NodeId> parent_;
  std::vector<Pos> depth_;
  std::vector<Pos> lo_;  // internal nodes only, indexed by id - n
  std::vector<Pos> hi_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<NodeId> children_;
  std::vector<NodeId> lcp_node_;
  std::vector<Pos> lcp_;
  RangeMinIndex rmq_;
};

/// Per-direction branching structure. A proper ancestor u of v is branching
/// for v's path when the child of u toward v is not u's first child (left) or
/// not its last child (right). A node is never branching for its own path.
///
/// branch_count(v) counts the branching proper ancestors of v. Along a leaf
/// path, the branching nodes with string depth >= depth(u) for an ancestor u
/// number branch_count(leaf) - branch_count(u); u itself is included exactly
/// when it branches toward the leaf.
class BranchingIndex {
 public:
  BranchingIndex() = default;
  BranchingIndex(const SuffixTree& t, Direction d);

  Direction direction() const { return dir_; }
  std::uint32_t branch_count(NodeId v) const { return count_[v]; }

  /// The d-th branching proper ancestor of v, counted upward from v.
  NodeId nth_branching_ancestor(NodeId v, std::uint32_t d) const {
    if (d == 0 || d > count_[v]) throw std::out_of_range("branching ancestor index out of range");
    return skeleton_.ancestor(v, d);
  }
  /// Unchecked variant for the query path.
  NodeId nth_branching_ancestor_unchecked(NodeId v, std::uint32_t d) const { return skeleton_.ancestor(v, d); }

  /// Nearest branching proper ancestor, or the root when there is none.
  NodeId skeleton_parent(NodeId v) const { return skeleton_parent_[v]; }

  std::uint64_t memory_words() const;

 private:
  Direction dir_ = Direction::kLeft;
  std::vector<std::uint32_t> count_;
  std::vector<NodeId> skeleton_parent_;
  LevelAncestor skeleton_;
};

}  // namespace locus
