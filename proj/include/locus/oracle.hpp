#pragma once

// Brute-force reference implementations. Everything in NaiveModel is derived
// from the raw text alone; the tree oracles walk a built SuffixTree node by
// node without touching the query structures.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "locus/suffix_tree.hpp"
#include "locus/types.hpp"

namespace locus::oracle {

/// Suffix array by sorting all suffixes of a sentinel-terminated text.
std::vector<Pos> naive_sa(std::span<const std::uint8_t> text);

/// Node signature independent of node numbering.
struct NodeSig {
  Pos depth = 0;
  Pos lo = 0;
  Pos hi = 0;
  friend bool operator==(const NodeSig&, const NodeSig&) = default;
  friend auto operator<=>(const NodeSig&, const NodeSig&) = default;
};

class NaiveModel {
 public:
  /// `raw` without sentinel. Quadratic memory; meant for n <= 2000.
  explicit NaiveModel(std::string_view raw);

  Pos size() const { return n_; }
  std::uint8_t at(Pos i) const { return text_[i]; }
  const std::vector<Pos>& sa() const { return sa_; }
  const std::vector<Pos>& rank() const { return rank_; }
  const std::vector<std::uint8_t>& bwt() const { return bwt_; }
  /// lcp of suffixes p and q.
  Pos lcp(Pos p, Pos q) const { return lcp_[static_cast<std::size_t>(p) * n_ + q]; }

  /// Rank of suffix p in the order of direction d (right reverses).
  Pos dir_rank(Pos p, Direction d) const { return d == Direction::kLeft ? rank_[p] : n_ - 1 - rank_[p]; }
  Pos suffix_at(Pos i, Direction d) const { return sa_[d == Direction::kLeft ? i : n_ - 1 - i]; }

  bool irreducible(Pos p, Direction d) const { return irr_[dir_index(d)][p] != 0; }
  Pos ell(Pos p, Direction d) const { return ell_[dir_index(d)][p]; }
  /// Closest irreducible neighbour and overlap, by scanning every irreducible suffix.
  Pos neighbour(Pos p, Direction d) const { return r_[dir_index(d)][p]; }
  Pos overlap(Pos p, Direction d) const { return c_[dir_index(d)][p]; }

  /// b_p[x] = 1 iff some suffix on the branching side shares exactly x symbols with p; x < ell_p.
  std::vector<bool> bp(Pos p, Direction d) const;
  /// Distinct depths >= ell at which suffixes on the branching side leave p.
  std::uint32_t count_at_least(Pos p, Pos ell, Direction d) const;
  /// Depth and rank interval of the locus of s[p..q].
  NodeSig locus(Pos p, Pos q) const;

  /// I-tree data: weights, parents by the quadratic previous-greater scan.
  Pos itree_base(Pos p, Direction d) const;
  Weight itree_weight(Pos p, Direction d) const;
  Pos itree_parent(Pos p, Direction d) const { return parent_[dir_index(d)][p]; }
  /// max{t in [base..p] : ell_t - m <= c_t} with m = ell_p - ell, W = ell + p - base.
  Pos weighted_ancestor(Pos p, Weight w, Direction d) const;

 private:
  Pos n_ = 0;
  std::vector<std::uint8_t> text_;
  std::vector<Pos> sa_;
  std::vector<Pos> rank_;
  std::vector<std::uint8_t> bwt_;
  std::vector<std::uint16_t> lcp_;
  std::vector<std::uint8_t> irr_[2];
  std::vector<Pos> ell_[2];
  std::vector<Pos> r_[2];
  std::vector<Pos> c_[2];
  std::vector<Pos> parent_[2];
};

/// Signatures of all nodes of the compacted trie, found by building the
/// uncompacted trie of all suffixes. Sorted; quadratic in n.
std::vector<NodeSig> trie_signatures(const NaiveModel& m);
std::vector<NodeSig> tree_signatures(const SuffixTree& t);

/// Branching proper ancestors of v, bottom-up, by walking parent links.
std::vector<NodeId> branch_list(const SuffixTree& t, NodeId v, Direction d);

/// Root descent reading every symbol of s[p..q]: the O(q - p) baseline.
NodeId descend(const SuffixTree& t, std::span<const std::uint8_t> text, std::span<const Pos> sa, Pos p, Pos q);
/// Root descent comparing one symbol per edge (skip/count).
NodeId descend_skip(const SuffixTree& t, std::span<const std::uint8_t> text, std::span<const Pos> sa, Pos p, Pos q);

}  // namespace locus::oracle
