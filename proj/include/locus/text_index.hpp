#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "locus/types.hpp"

namespace locus {

class Writer;
class Reader;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input bytes followed by the sentinel 0. The sentinel occurs exactly once
/// and is smaller than every other symbol.
class Text {
 public:
  static constexpr std::uint8_t kSentinel = 0;

  Text() = default;
  /// Throws InputError on empty input or input containing byte 0.
  static Text from_bytes(std::span<const std::uint8_t> raw);
  static Text from_string(std::string_view raw);

  Pos size() const { return static_cast<Pos>(bytes_.size()); }
  std::uint8_t operator[](Pos i) const { return bytes_[i]; }
  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::string_view view() const { return {reinterpret_cast<const char*>(bytes_.data()), bytes_.size()}; }

  void save(Writer& w) const;
  static Text load(Reader& r);

 private:
  std::vector<std::uint8_t> bytes_;
};

/// SA, ISA, LCP, both PLCP flavours and BWT of a sentinel-terminated text.
struct SuffixArrayBundle {
  std::vector<Pos> sa;
  std::vector<Pos> isa;
  std::vector<Pos> lcp;        // lcp[0] = 0, lcp[i] = lcp(sa[i-1], sa[i])
  std::vector<Pos> plcp_pred;  // lcp with the lexicographic predecessor
  std::vector<Pos> plcp_succ;  // lcp with the lexicographic successor, 0 for the last
  std::vector<std::uint8_t> bwt;

  Pos size() const { return static_cast<Pos>(sa.size()); }
  std::uint64_t memory_words() const;

  void save(Writer& w) const;
  static SuffixArrayBundle load(Reader& r);
};

/// Induced sorting (SA-IS). `s` must end with a unique smallest symbol 0;
/// symbols lie in [0, alphabet).
std::vector<Pos> suffix_array_sais(std::span<const std::uint8_t> s);

SuffixArrayBundle build_suffix_arrays(const Text& text);

/// Read-only view of the bundle in the order used by one branching direction.
/// The right direction reverses rank order, so every left-direction formula
/// applies unchanged: rank i here is rank n-1-i of the bundle.
class DirectionalArrays {
 public:
  DirectionalArrays(const SuffixArrayBundle& b, Direction d) : b_(&b), dir_(d), last_(b.size() - 1) {}

  Direction direction() const { return dir_; }
  Pos size() const { return last_ + 1; }
  Pos sa(Pos i) const { return b_->sa[map(i)]; }
  Pos isa(Pos p) const { return map(b_->isa[p]); }
  /// lcp between ranks i-1 and i in this order; 0 at i = 0.
  Pos lcp(Pos i) const {
    if (dir_ == Direction::kLeft) return b_->lcp[i];
    return i == 0 ? 0 : b_->lcp[last_ - i + 1];
  }
  std::uint8_t bwt(Pos i) const { return b_->bwt[map(i)]; }
  /// The per-position array ell_p of this direction.
  Pos plcp(Pos p) const { return dir_ == Direction::kLeft ? b_->plcp_pred[p] : b_->plcp_succ[p]; }
  /// Rank i starts a BWT run in this order.
  bool irreducible_rank(Pos i) const { return i == 0 || bwt(i - 1) != bwt(i); }
  bool irreducible(Pos p) const { return irreducible_rank(isa(p)); }
  /// p has a neighbour on the branching side.
  bool has_side_neighbour(Pos p) const { return isa(p) != 0; }

 private:
  Pos map(Pos i) const { return dir_ == Direction::kLeft ? i : last_ - i; }

  const SuffixArrayBundle* b_;
  Direction dir_;
  Pos last_;
};

}  // namespace locus
