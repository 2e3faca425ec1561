#pragma once

#include <array>
#include <cstdint>

namespace locus {

/// Primitive operations counted by instrumented queries.
enum class Op : std::uint8_t {
  kArrayRead,       // one random access into a flat array
  kCompare,         // one direct weight comparison
  kRank,            // one rank directory query
  kLca,             // one range-minimum LCA query
  kLevelAncestor,   // one ladder/jump level-ancestor query
  kMiniSearch,      // one bounded (<= 64 element) sorted-array search
  kCount
};

struct NullProbe {
  void tick(Op) {}
  void touched_ahat() {}
};

struct CountingProbe {
  std::array<std::uint64_t, static_cast<std::size_t>(Op::kCount)> counts{};
  std::uint64_t total = 0;
  bool ahat_used = false;

  void tick(Op op) {
    ++counts[static_cast<std::size_t>(op)];
    ++total;
  }
  void touched_ahat() { ahat_used = true; }
  void reset() { *this = CountingProbe{}; }
};

}  // namespace locus
