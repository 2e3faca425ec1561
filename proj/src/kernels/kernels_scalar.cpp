#include <bit>

#include "locus/kernels.hpp"

namespace locus::kernels {
namespace {

std::size_t count_less_scalar(const std::int32_t* a, std::size_t len, std::int32_t x) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) count += static_cast<std::size_t>(a[i] < x);
  return count;
}

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t count) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += static_cast<std::uint64_t>(std::popcount(words[i]));
  return total;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &count_less_scalar, &popcount_scalar};
  return table;
}

}  // namespace locus::kernels
