// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "locus/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace locus::kernels {
namespace {

std::size_t count_less_avx2(const std::int32_t* a, std::size_t len, std::int32_t x) {
  const __m256i needle = _mm256_set1_epi32(x);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i lt = _mm256_cmpgt_epi32(needle, v);
    count += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(lt)))));
  }
  for (; i < len; ++i) count += static_cast<std::size_t>(a[i] < x);
  return count;
}

// Nibble-table popcount (Mula), 4 words per step.
std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t count) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < count; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(words[i]));
  return total;
}

}  // namespace

const KernelTable* avx2() {
  static const KernelTable table{"avx2", &count_less_avx2, &popcount_avx2};
  return &table;
}

}  // namespace locus::kernels

#else

namespace locus::kernels {
const KernelTable* avx2() { return nullptr; }
}  // namespace locus::kernels

#endif
