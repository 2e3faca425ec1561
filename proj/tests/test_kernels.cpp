#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "locus/kernels.hpp"

using namespace locus;

TEST_CASE("active kernel table") {
  const auto& k = kernels::active();
  CHECK(!k.name.empty());
  if (kernels::avx2() == nullptr || !kernels::cpu_has_avx2()) CHECK(k.name == kernels::scalar().name);
}

TEST_CASE("scalar count_less is a lower bound on sorted input") {
  const std::vector<std::int32_t> a = {1, 3, 3, 8, 20};
  const auto& k = kernels::scalar();
  CHECK(k.count_less(a.data(), a.size(), 0) == 0);
  CHECK(k.count_less(a.data(), a.size(), 3) == 1);
  CHECK(k.count_less(a.data(), a.size(), 4) == 3);
  CHECK(k.count_less(a.data(), a.size(), 21) == 5);
  CHECK(k.count_less(a.data(), 0, 5) == 0);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* fast = kernels::avx2();
  if (fast == nullptr || !kernels::cpu_has_avx2()) return;
  const auto& ref = kernels::scalar();
  std::mt19937_64 rng(11);
  for (std::size_t len = 0; len <= 64; ++len) {
    for (int round = 0; round < 50; ++round) {
      std::vector<std::int32_t> a(len);
      for (auto& x : a) x = static_cast<std::int32_t>(rng() % 1000) - 500;
      if (round % 5 == 0 && len > 0) a.back() = std::numeric_limits<std::int32_t>::max();
      std::sort(a.begin(), a.end());
      for (std::int32_t x : {-1000, -500, 0, 1, 499, 1000, std::numeric_limits<std::int32_t>::max(),
                             std::numeric_limits<std::int32_t>::min(), static_cast<std::int32_t>(rng() % 1000) - 500}) {
        REQUIRE(fast->count_less(a.data(), len, x) == ref.count_less(a.data(), len, x));
      }
    }
  }
  for (std::size_t count = 0; count < 100; ++count) {
    std::vector<std::uint64_t> w(count);
    for (auto& x : w) x = rng();
    REQUIRE(fast->popcount(w.data(), count) == ref.popcount(w.data(), count));
  }
}
