#include "locus/suffix_tree.hpp"

#include <cassert>

#include "locus/serialize.hpp"

namespace locus {

SuffixTree::SuffixTree(const SuffixArrayBundle& b) : n_(b.size()) {
  const Pos n = n_;
  parent_.reserve(2 * static_cast<std::size_t>(n));
  parent_.assign(n, kNoNode);
  depth_.resize(n);
  for (Pos i = 0; i < n; ++i) depth_[i] = n - b.sa[i];
  lcp_node_.assign(n, kNoNode);

  // Attachments are emitted in lexicographic order per parent.
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(2 * static_cast<std::size_t>(n));
  auto new_internal = [&](Pos depth, Pos lo) {
    const auto id = static_cast<NodeId>(parent_.size());
    parent_.push_back(kNoNode);
    depth_.push_back(depth);
    lo_.push_back(lo);
    return id;
  };
  auto attach = [&](NodeId child, NodeId parent) {
    parent_[child] = parent;
    edges.emplace_back(parent, child);
  };

  std::vector<NodeId> stack{new_internal(0, 0)};
  for (Pos i = 0; i < n; ++i) {
    const Pos h = i == 0 ? 0 : b.lcp[i];
    while (depth_[stack.back()] > h) {
      const NodeId last = stack.back();
      stack.pop_back();
      const Pos top_depth = depth_[stack.back()];
      if (top_depth >= h) {
        attach(last, stack.back());
      } else {
        const NodeId x = new_internal(h, lo(last));
        attach(last, x);
        stack.push_back(x);
        break;
      }
    }
    if (i > 0) lcp_node_[i] = stack.back();
    stack.push_back(i);
  }
  while (stack.size() > 1) {
    const NodeId last = stack.back();
    stack.pop_back();
    attach(last, stack.back());
  }

  const std::size_t internal = parent_.size() - n;
  child_begin_.assign(internal + 1, 0);
  for (const auto& [p, c] : edges) ++child_begin_[p - n + 1];
  for (std::size_t k = 0; k < internal; ++k) child_begin_[k + 1] += child_begin_[k];
  children_.resize(edges.size());
  {
    std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (const auto& [p, c] : edges) children_[fill[p - n]++] = c;
  }
  hi_.resize(internal);
  // Parents may be created after their children; use a top-down order.
  std::vector<NodeId> order{root()};
  order.reserve(internal);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    for (const NodeId c : children(order[qi])) {
      if (!is_leaf(c)) order.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t k = *it - n;
    hi_[k] = hi(children_[child_begin_[k + 1] - 1]);
  }
  lcp_ = b.lcp;
  build_lca();
}

void SuffixTree::build_lca() { rmq_ = RangeMinIndex(lcp_); }

std::uint64_t SuffixTree::memory_words() const {
  return (parent_.size() + depth_.size() + lo_.size() + hi_.size() + child_begin_.size() + children_.size() +
          lcp_node_.size() + lcp_.size()) / 2 + rmq_.memory_words();
}

void SuffixTree::save(Writer& w) const {
  w.u32(n_);
  w.vec(parent_);
  w.vec(lo_);
  w.vec(hi_);
  w.vec(child_begin_);
  w.vec(children_);
  w.vec(lcp_node_);
  std::vector<Pos> internal_depth(depth_.begin() + n_, depth_.end());
  w.vec(internal_depth);
}

SuffixTree SuffixTree::load(Reader& r, const SuffixArrayBundle& b) {
  SuffixTree t;
  t.n_ = r.u32();
  if (t.n_ != b.size()) throw FormatError("tree size disagrees with suffix array");
  t.parent_ = r.vec<NodeId>();
  t.lo_ = r.vec<Pos>();
  t.hi_ = r.vec<Pos>();
  t.child_begin_ = r.vec<std::uint32_t>();
  t.children_ = r.vec<NodeId>();
  t.lcp_node_ = r.vec<NodeId>();
  const auto internal_depth = r.vec<Pos>();
  const std::size_t internal = t.parent_.size() - t.n_;
  if (t.parent_.size() < t.n_ || t.lo_.size() != internal || t.hi_.size() != internal ||
      t.child_begin_.size() != internal + 1 || internal_depth.size() != internal || t.lcp_node_.size() != t.n_) {
    throw FormatError("tree section sizes disagree");
  }
  t.depth_.resize(t.n_);
  for (Pos i = 0; i < t.n_; ++i) t.depth_[i] = t.n_ - b.sa[i];
  t.depth_.insert(t.depth_.end(), internal_depth.begin(), internal_depth.end());
  t.lcp_ = b.lcp;
  t.build_lca();
  return t;
}

BranchingIndex::BranchingIndex(const SuffixTree& t, Direction d) : dir_(d) {
  const NodeId nodes = t.node_count();
  count_.assign(nodes, 0);
  skeleton_parent_.assign(nodes, kNoNode);
  // Internal ids grow in creation order, but parents are not always created
  // before children; walk top-down from the root instead.
  std::vector<NodeId> queue{t.root()};
  queue.reserve(nodes);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const NodeId v = queue[qi];
    const auto kids = t.children(v);
    for (std::size_t j = 0; j < kids.size(); ++j) {
      const NodeId c = kids[j];
      const bool branching = d == Direction::kLeft ? j > 0 : j + 1 < kids.size();
      count_[c] = count_[v] + (branching ? 1 : 0);
      if (branching || v == t.root()) {
        skeleton_parent_[c] = v;
      } else {
        skeleton_parent_[c] = skeleton_parent_[v];
      }
      queue.push_back(c);
    }
  }
  skeleton_ = LevelAncestor(skeleton_parent_);
}

std::uint64_t BranchingIndex::memory_words() const {
  return (count_.size() + skeleton_parent_.size()) / 2 + skeleton_.memory_words();
}

}  // namespace locus
