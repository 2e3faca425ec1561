#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string_view>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline std::string random_text(std::size_t n, std::string_view alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(n, ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

inline std::string fibonacci(std::size_t n) {
  std::string a = "b", b = "a";
  while (b.size() < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b.substr(0, n);
}

inline std::string thue_morse(std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i) s[i] = (std::popcount(i) & 1) ? 'b' : 'a';
  return s;
}

inline std::string english_like(std::size_t n, std::uint64_t seed) {
  static const char* words[] = {"the", "of", "and", "to", "in", "a", "is", "that", "for", "it", "as", "was",
                                "with", "be", "by", "on", "not", "he", "this", "are", "or", "his", "from",
                                "at", "which", "but", "have", "an", "had", "they", "you", "were", "their"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(words) - 1);
  std::string s;
  while (s.size() < n) {
    s += words[pick(rng)];
    s += ' ';
  }
  s.resize(n);
  return s;
}

inline std::string repeat(std::string_view unit, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s += unit;
  return s;
}

/// Replaces each symbol with probability `rate` by a random one.
inline std::string mutate(std::string s, double rate, std::uint64_t seed, std::string_view alphabet) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (auto& c : s) {
    if (coin(rng) < rate) c = alphabet[pick(rng)];
  }
  return s;
}

/// Noisy copies of one random binary block of length 40.
inline std::string noisy_blocks(std::size_t n, std::uint64_t seed) {
  const std::string block = random_text(40, "ab", seed);
  std::string s;
  while (s.size() < n) s += mutate(block, 0.08, seed * 100 + s.size(), "ab");
  s.resize(n);
  return s;
}

/// Named texts without sentinel; every one has length + 1 <= max_n.
inline std::vector<std::pair<std::string, std::string>> corpus(std::size_t max_n = 300) {
  std::vector<std::pair<std::string, std::string>> all = {
      {"mississippi", "mississippi"},
      {"banana", "banana"},
      {"a", "a"},
      {"ab", "ab"},
      {"abracadabra", "abracadabra"},
      {"fib-55", fibonacci(55)},
      {"fib-144", fibonacci(144)},
      {"fib-233", fibonacci(233)},
      {"a^7", std::string(7, 'a')},
      {"a^64", std::string(64, 'a')},
      {"a^299", std::string(299, 'a')},
      {"(ab)^10", repeat("ab", 10)},
      {"(ab)^149", repeat("ab", 149)},
      {"(abc)^50", repeat("abc", 50)},
      {"a^5ba^5", repeat("a", 5) + "b" + repeat("a", 5)},
      {"a^60ba^60", repeat("a", 60) + "b" + repeat("a", 60)},
      {"a^149ba^149", repeat("a", 149) + "b" + repeat("a", 149)},
      {"thue-morse-256", thue_morse(256)},
      {"binary-100", random_text(100, "ab", 1)},
      {"binary-299", random_text(299, "ab", 2)},
      {"dna-150", random_text(150, "acgt", 3)},
      {"dna-299", random_text(299, "acgt", 4)},
      {"english-200", english_like(200, 5)},
      {"english-299", english_like(299, 6)},
      {"alpha26-299", random_text(299, "abcdefghijklmnopqrstuvwxyz", 7)},
      {"binary-40a", random_text(40, "ab", 8)},
      {"binary-40b", random_text(40, "ab", 9)},
      {"dna-64", random_text(64, "acgt", 10)},
      {"runs-299", repeat("aaabbbaab", 33) + "ab"},
      // Near-repetitive texts whose I-trees have long non-root heavy paths.
      {"fib-noisy-299a", mutate(fibonacci(299), 0.02, 7, "ab")},
      {"fib-noisy-299b", mutate(fibonacci(299), 0.02, 16, "ab")},
      {"fib-noisy-299c", mutate(fibonacci(299), 0.02, 20, "ab")},
      {"fib-noisy-299d", mutate(fibonacci(299), 0.02, 35, "ab")},
      {"tm-noisy-299a", mutate(thue_morse(299), 0.02, 18, "ab")},
      {"tm-noisy-299b", mutate(thue_morse(299), 0.02, 22, "ab")},
      {"blocks-299a", noisy_blocks(299, 9)},
      {"blocks-299b", noisy_blocks(299, 15)},
  };
  if (max_n > 300) {
    all.push_back({"dna-499", random_text(499, "acgt", 11)});
    all.push_back({"binary-499", random_text(499, "ab", 12)});
    all.push_back({"fib-377", fibonacci(377)});
    all.push_back({"english-499", english_like(499, 13)});
    all.push_back({"fib-noisy-499a", mutate(fibonacci(499), 0.02, 7, "ab")});
    all.push_back({"fib-noisy-499b", mutate(fibonacci(499), 0.02, 13, "ab")});
    all.push_back({"tm-noisy-499a", mutate(thue_morse(499), 0.02, 10, "ab")});
    all.push_back({"tm-noisy-499b", mutate(thue_morse(499), 0.02, 15, "ab")});
    all.push_back({"blocks-499a", noisy_blocks(499, 17)});
    all.push_back({"blocks-499b", noisy_blocks(499, 22)});
  }
  if (max_n > 500) {
    all.push_back({"dna-999", random_text(999, "acgt", 14)});
    all.push_back({"binary-999", random_text(999, "ab", 15)});
    all.push_back({"fib-987", fibonacci(987)});
  }
  std::erase_if(all, [&](const auto& t) { return t.second.size() + 1 > max_n; });
  return all;
}

}  // namespace fixtures
