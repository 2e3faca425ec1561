#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string_view>

#include "locus/itree.hpp"
#include "locus/probe.hpp"
#include "locus/suffix_tree.hpp"
#include "locus/text_index.hpp"
#include "locus/types.hpp"

namespace locus {

struct BuildOptions {
  bool share_ahat = true;
};

struct IndexStats {
  std::uint64_t n = 0;
  std::uint64_t nodes = 0;
  std::uint64_t irreducible_count[2] = {0, 0};
  std::uint64_t irreducible_sum[2] = {0, 0};
  ForestStats forest[2];
  std::uint64_t words = 0;
  double words_per_symbol = 0;
};

/// Path label of a node as an extent of the text.
struct Label {
  Pos start = 0;
  Pos length = 0;
};

/// Constant-time suffix-tree locus of any substring s[p..q].
class LocusIndex {
 public:
  LocusIndex();
  LocusIndex(LocusIndex&&) noexcept;
  LocusIndex& operator=(LocusIndex&&) noexcept;
  ~LocusIndex();

  /// Throws InputError on empty input or input containing byte 0.
  static LocusIndex build(std::span<const std::uint8_t> raw, BuildOptions options = {});
  static LocusIndex build(std::string_view raw, BuildOptions options = {});

  /// Text length including the sentinel.
  Pos size() const;
  const Text& text() const;
  const SuffixArrayBundle& arrays() const;
  const SuffixTree& tree() const;
  const BranchingIndex& branching(Direction d) const;
  const IrreducibleStore& store(Direction d) const;
  const NeighbourTable& neighbours(Direction d) const;
  const ITreeForest& forest(Direction d) const;

  /// Locus of s[p..q]. Throws std::out_of_range unless p <= q < size().
  NodeId locus(Pos p, Pos q) const;
  NodeId locus_counted(Pos p, Pos q, CountingProbe& probe) const;
  /// Number of branching nodes of direction d on the path of suffix p with
  /// string depth >= ell. Requires 1 <= ell <= size() - p.
  std::uint32_t count_branching_at_least(Pos p, Pos ell, Direction d) const;

  NodeId leaf_of(Pos p) const;
  Pos string_depth(NodeId v) const;
  Label label(NodeId v) const;

  IndexStats stats() const;

  void save(std::ostream& out) const;
  static LocusIndex load(std::istream& in);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace locus
