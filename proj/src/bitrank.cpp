#include "locus/bitrank.hpp"

#include <algorithm>
#include <cassert>

#include "locus/kernels.hpp"
#include "locus/serialize.hpp"

namespace locus {

namespace {

constexpr std::uint64_t low_mask(std::uint64_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

void BitArray::resize(std::uint64_t len) {
  words_.resize((len + 63) / 64, 0);
  len_ = len;
  if ((len & 63) != 0) words_.back() &= low_mask(len & 63);
}

void BitArray::push_back(bool v) {
  if ((len_ & 63) == 0) words_.push_back(0);
  ++len_;
  if (v) set(len_ - 1);
}

void BitArray::write_bits(std::uint64_t offset, std::span<const std::uint64_t> src, std::uint64_t len) {
  assert(offset + len <= len_);
  std::uint64_t done = 0;
  const unsigned shift = offset & 63;
  std::uint64_t word = offset >> 6;
  while (done < len) {
    const std::uint64_t take = std::min<std::uint64_t>(64, len - done);
    const std::uint64_t chunk = src[done >> 6] & low_mask(take);
    // chunk lands in words_[word] (bits shift..) and spills into word + 1.
    const std::uint64_t keep_lo = low_mask(shift);
    const std::uint64_t span_mask = low_mask(take) << shift;
    words_[word] = (words_[word] & (keep_lo | ~span_mask)) | (chunk << shift);
    if (shift != 0 && take > 64 - shift) {
      const std::uint64_t spill_bits = take - (64 - shift);
      words_[word + 1] = (words_[word + 1] & ~low_mask(spill_bits)) | (chunk >> (64 - shift));
    }
    done += take;
    ++word;
  }
}

void BitArray::append_bits(std::span<const std::uint64_t> src, std::uint64_t len) {
  const std::uint64_t offset = len_;
  resize(len_ + len);
  write_bits(offset, src, len);
}

void BitArray::clear_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) return;
  const std::uint64_t first = lo >> 6;
  const std::uint64_t last = (hi - 1) >> 6;
  if (first == last) {
    words_[first] &= ~(low_mask(hi - lo) << (lo & 63));
    return;
  }
  words_[first] &= low_mask(lo & 63);
  std::fill(words_.begin() + static_cast<std::ptrdiff_t>(first + 1), words_.begin() + static_cast<std::ptrdiff_t>(last), 0);
  const std::uint64_t tail = hi & 63;
  if (tail == 0) {
    words_[last] = 0;
  } else {
    words_[last] &= ~low_mask(tail);
  }
}

std::uint64_t BitArray::count_all() const { return kernels::active().popcount(words_.data(), words_.size()); }

void BitArray::save(Writer& w) const {
  w.u64(len_);
  w.vec(words_);
}

BitArray BitArray::load(Reader& r) {
  BitArray b;
  b.len_ = r.u64();
  b.words_ = r.vec<std::uint64_t>();
  if (b.words_.size() != (b.len_ + 63) / 64) throw FormatError("bit array length mismatch");
  return b;
}

RankIndex::RankIndex(BitArray bits) : bits_(std::move(bits)) { build_directory(); }

void RankIndex::build_directory() {
  const auto words = bits_.words();
  // One trailing entry so rank1(size()) never reads past the directory.
  const std::uint64_t n_words = words.size() + 1;
  super_.assign((n_words + kWordsPerSuper - 1) / kWordsPerSuper + 1, 0);
  block_.assign(n_words, 0);
  std::uint64_t total = 0;
  for (std::uint64_t sb = 0; sb * kWordsPerSuper < n_words; ++sb) {
    super_[sb] = total;
    const std::uint64_t begin = sb * kWordsPerSuper;
    const std::uint64_t end = std::min<std::uint64_t>(begin + kWordsPerSuper, n_words);
    std::uint64_t within = 0;
    for (std::uint64_t wi = begin; wi < end; ++wi) {
      block_[wi] = static_cast<std::uint16_t>(within);
      if (wi < words.size()) within += static_cast<std::uint64_t>(std::popcount(words[wi]));
    }
    total += within;
  }
  super_.back() = total;
}

std::uint64_t RankIndex::memory_words() const {
  return bits_.memory_words() + super_.size() + (block_.size() + 3) / 4;
}

void RankIndex::save(Writer& w) const { bits_.save(w); }

RankIndex RankIndex::load(Reader& r) { return RankIndex(BitArray::load(r)); }

}  // namespace locus
