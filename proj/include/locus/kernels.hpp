#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the active table is chosen once at startup from
// CPUID. Setting LOCUS_KERNELS=scalar in the environment pins the reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace locus::kernels {

/// Number of elements of a[0..len) that are strictly less than x.
/// On a sorted array this is the lower-bound index of x.
using CountLessFn = std::size_t (*)(const std::int32_t* a, std::size_t len, std::int32_t x);

/// Total number of set bits in words[0..count).
using PopcountFn = std::uint64_t (*)(const std::uint64_t* words, std::size_t count);

struct KernelTable {
  std::string_view name;
  CountLessFn count_less;
  PopcountFn popcount;
};

const KernelTable& scalar();
/// nullptr when the AVX2 variant is not compiled in.
const KernelTable* avx2();
bool cpu_has_avx2();

/// Table used by the library.
const KernelTable& active();

}  // namespace locus::kernels
