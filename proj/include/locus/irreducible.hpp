#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "locus/bitrank.hpp"
#include "locus/suffix_tree.hpp"
#include "locus/text_index.hpp"

namespace locus {

class Writer;
class Reader;

/// One bit per position: p is irreducible when its rank starts a BWT run in
/// the given direction's order.
BitArray mark_irreducible(const DirectionalArrays& view);

/// Sum of ell_p over irreducible positions.
std::uint64_t irreducible_lcp_sum(const DirectionalArrays& view);

/// The arrays b_p for irreducible positions of one direction, concatenated in
/// position order behind a single rank directory. b_p[d] = 1 iff the leaf of
/// suffix p has a branching ancestor of string depth d, for d < ell_p.
class IrreducibleStore {
 public:
  IrreducibleStore() = default;
  IrreducibleStore(const SuffixTree& tree, const DirectionalArrays& view);

  Direction direction() const { return dir_; }
  bool is_irreducible(Pos p) const { return flags_.bits().get(p); }
  std::uint64_t irreducible_count() const { return offsets_.size() - 1; }

  /// ell_p of an irreducible p.
  std::uint64_t length(Pos p) const {
    const std::uint64_t k = flags_.rank1(p);
    return offsets_[k + 1] - offsets_[k];
  }

  /// Ones in b_p[lo..hi]; positions >= ell_p read as zero.
  std::uint64_t count_ones(Pos p, std::int64_t lo, std::int64_t hi) const {
    if (!is_irreducible(p)) throw std::logic_error("b_p queried for a non-irreducible position");
    return count_ones_unchecked(p, lo, hi);
  }
  std::uint64_t count_ones_unchecked(Pos p, std::int64_t lo, std::int64_t hi) const {
    const std::uint64_t k = flags_.rank1(p);
    const auto off = static_cast<std::int64_t>(offsets_[k]);
    const auto len = static_cast<std::int64_t>(offsets_[k + 1]) - off;
    if (lo < 0) lo = 0;
    if (hi >= len) hi = len - 1;
    if (lo > hi) return 0;
    return bits_.count_ones(off + lo, off + hi);
  }

  /// Copy of b_p.
  std::vector<bool> bits_of(Pos p) const;

  std::uint64_t total_bits() const { return bits_.size(); }
  std::uint64_t memory_words() const { return flags_.memory_words() + offsets_.size() + bits_.memory_words(); }

  void save(Writer& w) const;
  static IrreducibleStore load(Reader& r);

 private:
  Direction dir_ = Direction::kLeft;
  RankIndex flags_;
  std::vector<std::uint64_t> offsets_;  // per irreducible index, plus end
  RankIndex bits_;
};

/// Closest irreducible lexicographic neighbour r_p and overlap c_p = lcp(r_p, p)
/// for every position of one direction; r_p = p and c_p = ell_p when p is
/// irreducible.
class NeighbourTable {
 public:
  NeighbourTable() = default;
  NeighbourTable(const SuffixTree& tree, const DirectionalArrays& view, const IrreducibleStore& store);

  Pos neighbour(Pos p) const { return r_[p]; }
  Pos overlap(Pos p) const { return c_[p]; }
  Pos size() const { return static_cast<Pos>(r_.size()); }
  std::uint64_t memory_words() const { return (r_.size() + c_.size()) / 2; }

  void save(Writer& w) const;
  static NeighbourTable load(Reader& r);

 private:
  std::vector<Pos> r_;
  std::vector<Pos> c_;
};

}  // namespace locus
