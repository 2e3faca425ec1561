#include <cstdlib>
#include <string_view>

#include "locus/kernels.hpp"

namespace locus::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const KernelTable& select_table() {
  if (const char* forced = std::getenv("LOCUS_KERNELS"); forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar();
  }
  if (const KernelTable* simd = avx2(); simd != nullptr && cpu_has_avx2()) return *simd;
  return scalar();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace locus::kernels
