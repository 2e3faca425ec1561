#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace locus {

class Writer;
class Reader;

/// Packed bit sequence on 64-bit words. Bits at positions >= size() are kept
/// zero in the backing words.
class BitArray {
 public:
  BitArray() = default;
  explicit BitArray(std::uint64_t len) : words_((len + 63) / 64, 0), len_(len) {}

  std::uint64_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::uint64_t i, bool v) { v ? set(i) : reset(i); }

  /// Grows (zero-filled) or truncates to `len` bits.
  void resize(std::uint64_t len);
  void push_back(bool v);

  /// Copies the first `len` bits of `src` to bit offset `offset` of this array,
  /// which must already be large enough. Word-at-a-time.
  void write_bits(std::uint64_t offset, std::span<const std::uint64_t> src, std::uint64_t len);
  /// Appends the first `len` bits of `src`.
  void append_bits(std::span<const std::uint64_t> src, std::uint64_t len);
  /// Clears bits [lo, hi) word-at-a-time.
  void clear_range(std::uint64_t lo, std::uint64_t hi);

  /// Population count of the whole array (bulk kernel).
  std::uint64_t count_all() const;
  std::uint64_t memory_words() const { return words_.size(); }

  void save(Writer& w) const;
  static BitArray load(Reader& r);

  friend bool operator==(const BitArray&, const BitArray&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t len_ = 0;
};

/// Bit array with a two-level rank directory: cumulative counts per 512-bit
/// superblock and 16-bit counts per word relative to its superblock.
class RankIndex {
 public:
  static constexpr std::uint64_t kWordsPerSuper = 8;

  RankIndex() = default;
  explicit RankIndex(BitArray bits);

  const BitArray& bits() const { return bits_; }
  std::uint64_t size() const { return bits_.size(); }

  /// Ones in [0, i), i <= size().
  std::uint64_t rank1(std::uint64_t i) const {
    const std::uint64_t word = i >> 6;
    std::uint64_t r = super_[word / kWordsPerSuper] + block_[word];
    if (const unsigned shift = i & 63; shift != 0) {
      r += static_cast<std::uint64_t>(std::popcount(bits_.words()[word] & ((std::uint64_t{1} << shift) - 1)));
    }
    return r;
  }

  /// Ones in positions [lo..hi] (inclusive) intersected with [0..size()-1].
  /// Positions past the end read as zero; lo > hi is an empty range.
  std::uint64_t count_ones(std::int64_t lo, std::int64_t hi) const {
    if (lo < 0) lo = 0;
    const auto len = static_cast<std::int64_t>(bits_.size());
    if (hi >= len) hi = len - 1;
    if (lo > hi) return 0;
    return rank1(static_cast<std::uint64_t>(hi) + 1) - rank1(static_cast<std::uint64_t>(lo));
  }

  std::uint64_t total_ones() const { return rank1(bits_.size()); }
  std::uint64_t memory_words() const;

  void save(Writer& w) const;
  static RankIndex load(Reader& r);

 private:
  void build_directory();

  BitArray bits_;
  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> block_;
};

}  // namespace locus
