#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "locus/bitrank.hpp"
#include "locus/irreducible.hpp"
#include "locus/kernels.hpp"
#include "locus/probe.hpp"
#include "locus/text_index.hpp"
#include "locus/types.hpp"

namespace locus {

class Writer;
class Reader;

struct ForestOptions {
  /// Reuse sampled arrays across isomorphic subtrees. Disabling it gives every
  /// path that needs one its own array; answers must not change.
  bool share_ahat = true;
};

/// Why a heavy path holds (or refers to) its sampled array.
enum class AhatKind : std::uint8_t {
  kRootPath = 0,   // owned: the heavy path through a tree root
  kSlot = 1,       // owned: built on demand for a root child of another tree
  kFallback = 2,   // owned: sharing was not applicable
  kUnshared = 3,   // owned: sharing disabled
};

/// How a non-root heavy path obtained its array.
enum class ShareCase : std::uint8_t {
  kNone = 0,       // no array needed (at most two encodable weights) or owned
  kHeavyRoot = 1,  // image path is the root path of I_r
  kLightSlot = 2,  // image path hangs below a light root child of I_r
  kSmallEll = 3,   // ell_r too short, mapped through x_{k-1} instead
};

struct ForestStats {
  std::uint64_t trees = 0;
  std::uint64_t paths = 0;
  std::uint64_t owned_arrays = 0;
  std::uint64_t owned_bits = 0;
  std::uint64_t root_arrays = 0;
  std::uint64_t slot_arrays = 0;
  std::uint64_t fallback_arrays = 0;
  std::uint64_t shared_paths = 0;
  std::uint64_t case_heavy = 0;
  std::uint64_t case_light = 0;
  std::uint64_t case_small = 0;
  std::uint64_t case3_precondition_failures = 0;
  std::uint64_t max_slots_per_tree = 0;
  std::uint64_t max_marked_list = 0;
};

/// The forest of trees I_{p'}, one per irreducible position p', covering the
/// run p'..p''-1 up to the next irreducible position. Node r != p' carries
/// weight r - p' + c_r and hangs below the nearest earlier position of
/// strictly larger weight; the root weight is kInfiniteWeight.
///
/// Each tree is split into heavy paths. A query first locates the heavy path
/// holding the answer through a per-path list of marked ancestors (the path
/// tops above it), then searches that path with a rank over the sampled
/// array a-hat (one bit per 64 weight units) and a <= 64 element block search.
class ITreeForest {
 public:
  static constexpr Weight kGranularity = 64;

  ITreeForest() = default;
  ITreeForest(const DirectionalArrays& view, const IrreducibleStore& store, const NeighbourTable& table,
              ForestOptions options = {});

  Pos size() const { return static_cast<Pos>(weight_.size()); }
  Pos base(Pos p) const { return base_[p]; }
  bool is_root(Pos p) const { return base_[p] == p; }
  Weight weight(Pos p) const { return weight_[p]; }
  Pos parent(Pos p) const { return parent_[p]; }
  /// 1-based attachment order among the parent's children.
  std::uint32_t child_ordinal(Pos p) const { return ordinal_[p]; }
  std::span<const Pos> children(Pos p) const {
    return std::span<const Pos>(children_).subspan(child_begin_[p], child_begin_[p + 1] - child_begin_[p]);
  }
  std::uint32_t subtree_size(Pos p) const { return size_[p]; }

  std::uint32_t path_count() const { return static_cast<std::uint32_t>(path_begin_.size() - 1); }
  std::uint32_t path_of(Pos p) const { return path_id_[p]; }
  /// Nodes of a heavy path, bottom-up.
  std::span<const Pos> path_nodes(std::uint32_t path) const {
    return std::span<const Pos>(path_nodes_).subspan(path_begin_[path], path_begin_[path + 1] - path_begin_[path]);
  }
  std::span<const Weight> path_weights(std::uint32_t path) const {
    return std::span<const Weight>(path_weights_).subspan(path_begin_[path], path_begin_[path + 1] - path_begin_[path]);
  }
  /// Number of path weights <= ell of the tree base.
  std::uint32_t path_m(std::uint32_t path) const { return path_m_[path]; }
  /// Number of leading path weights answered through a-hat.
  std::uint32_t path_encoded(std::uint32_t path) const { return path_encoded_[path]; }
  /// Array id used by the path, or -1.
  std::int32_t path_ahat(std::uint32_t path) const { return path_ahat_[path]; }
  bool path_owns_ahat(std::uint32_t path) const { return path_owns_[path] != 0; }
  ShareCase path_share_case(std::uint32_t path) const { return static_cast<ShareCase>(path_case_[path]); }

  std::uint32_t array_count() const { return static_cast<std::uint32_t>(ahat_kind_.size()); }
  AhatKind array_kind(std::uint32_t id) const { return static_cast<AhatKind>(ahat_kind_[id]); }
  /// Array bits a[0..len) of one array.
  std::vector<bool> array_bits(std::uint32_t id) const;
  Weight array_origin(std::uint32_t id) const { return ahat_origin_[id]; }

  /// Reuse slot array of a root child of some tree, or -1.
  std::int32_t slot(Pos p) const { return slot_[p]; }

  /// Marked ancestors of every node of a path: (top weight, entry node) pairs,
  /// nearest first; the first entry node is unused (the query node itself).
  std::span<const Weight> marked_weights(std::uint32_t path) const {
    return std::span<const Weight>(marked_weights_).subspan(marked_begin_[path], marked_begin_[path + 1] - marked_begin_[path]);
  }
  std::span<const Pos> marked_entries(std::uint32_t path) const {
    return std::span<const Pos>(marked_entries_).subspan(marked_begin_[path], marked_begin_[path + 1] - marked_begin_[path]);
  }

  /// Path node with the minimum weight >= w. Requires w <= ell of the base
  /// and w <= the top weight.
  template <class Probe>
  Pos path_predecessor(std::uint32_t path, Weight w, Probe& probe) const;
  Pos path_predecessor(std::uint32_t path, Weight w) const {
    NullProbe probe;
    return path_predecessor(path, w, probe);
  }

  /// Nearest ancestor of p (p included) with weight >= w. Requires
  /// w <= ell of the base of p's tree.
  template <class Probe>
  Pos weighted_ancestor(Pos p, Weight w, Probe& probe) const;
  Pos weighted_ancestor(Pos p, Weight w) const {
    NullProbe probe;
    return weighted_ancestor(p, w, probe);
  }

  const ForestStats& stats() const { return stats_; }
  /// Owned-array reuse slots per tree base (only bases with at least one).
  std::vector<std::pair<Pos, std::uint32_t>> slots_per_tree() const;
  std::uint64_t memory_words() const;

  void save(Writer& w) const;
  static ITreeForest load(Reader& r);

 private:
  struct Builder;

  // Per position.
  std::vector<Pos> base_;
  std::vector<Weight> weight_;
  std::vector<Pos> parent_;
  std::vector<std::uint32_t> ordinal_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<Pos> children_;
  std::vector<std::uint32_t> path_id_;
  std::vector<std::int32_t> slot_;

  // Per heavy path.
  std::vector<std::uint32_t> path_begin_;
  std::vector<Pos> path_nodes_;
  std::vector<Weight> path_weights_;
  std::vector<std::uint32_t> path_m_;
  std::vector<std::uint32_t> path_encoded_;
  std::vector<std::int32_t> path_ahat_;
  std::vector<std::uint8_t> path_owns_;
  std::vector<std::uint8_t> path_case_;
  std::vector<std::uint32_t> block_begin_;   // per path, into block_starts_
  std::vector<std::uint32_t> block_starts_;  // path-relative index of each non-empty block's first weight, plus end
  std::vector<std::uint32_t> marked_begin_;
  std::vector<Weight> marked_weights_;
  std::vector<Pos> marked_entries_;

  // Owned sampled arrays.
  std::vector<std::uint64_t> ahat_offset_;
  std::vector<Weight> ahat_origin_;
  std::vector<Weight> ahat_span_;  // largest encoded weight minus origin
  std::vector<std::uint8_t> ahat_kind_;
  RankIndex ahat_;

  ForestStats stats_;
};

template <class Probe>
Pos ITreeForest::path_predecessor(std::uint32_t path, Weight w, Probe& probe) const {
  const std::uint32_t begin = path_begin_[path];
  const Weight* weights = path_weights_.data() + begin;
  const Pos* nodes = path_nodes_.data() + begin;
  probe.tick(Op::kCompare);
  if (w <= weights[0]) return nodes[0];
  const std::uint32_t encoded = path_encoded_[path];
  probe.tick(Op::kCompare);
  if (encoded == 0 || w > weights[encoded - 1]) {
    // The answer is one of the (at most three) weights past the encoded ones.
    std::uint32_t j = encoded;
    for (probe.tick(Op::kCompare); weights[j] < w; probe.tick(Op::kCompare)) ++j;
    return nodes[j];
  }
  probe.touched_ahat();
  const auto id = static_cast<std::uint32_t>(path_ahat_[path]);
  const auto block = static_cast<std::int64_t>((w - weights[0]) / kGranularity);
  const auto off = static_cast<std::int64_t>(ahat_offset_[id]);
  probe.tick(Op::kRank);
  const std::uint64_t h = block == 0 ? 0 : ahat_.count_ones(off, off + block - 1);
  const std::uint32_t* starts = block_starts_.data() + block_begin_[path];
  probe.tick(Op::kArrayRead);
  const std::uint32_t s = starts[h];
  const std::uint32_t t = starts[h + 1];
  probe.tick(Op::kMiniSearch);
  const std::size_t j = s + kernels::active().count_less(weights + s, t - s, w);
  return nodes[j];
}

template <class Probe>
Pos ITreeForest::weighted_ancestor(Pos p, Weight w, Probe& probe) const {
  probe.tick(Op::kCompare);
  if (weight_[p] >= w) return p;
  probe.tick(Op::kArrayRead);
  const std::uint32_t path = path_id_[p];
  const std::uint32_t mb = marked_begin_[path];
  const std::uint32_t me = marked_begin_[path + 1];
  probe.tick(Op::kMiniSearch);
  const std::size_t i = kernels::active().count_less(marked_weights_.data() + mb, me - mb, w);
  const Pos entry = i == 0 ? p : marked_entries_[mb + i];
  probe.tick(Op::kCompare);
  if (weight_[entry] >= w) return entry;
  probe.tick(Op::kArrayRead);
  return path_predecessor(path_id_[entry], w, probe);
}

}  // namespace locus
