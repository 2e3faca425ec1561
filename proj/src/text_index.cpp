#include "locus/text_index.hpp"

#include <algorithm>
#include <cassert>

#include "locus/serialize.hpp"

namespace locus {

Text Text::from_bytes(std::span<const std::uint8_t> raw) {
  if (raw.empty()) throw InputError("input text is empty");
  if (std::find(raw.begin(), raw.end(), kSentinel) != raw.end()) {
    throw InputError("input contains the reserved sentinel byte 0x00");
  }
  if (raw.size() >= std::uint64_t{kNoPos} / 2) throw InputError("input too large");
  Text t;
  t.bytes_.reserve(raw.size() + 1);
  t.bytes_.assign(raw.begin(), raw.end());
  t.bytes_.push_back(kSentinel);
  return t;
}

Text Text::from_string(std::string_view raw) {
  return from_bytes({reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()});
}

void Text::save(Writer& w) const { w.vec(bytes_); }

Text Text::load(Reader& r) {
  Text t;
  t.bytes_ = r.vec<std::uint8_t>();
  if (t.bytes_.empty() || t.bytes_.back() != kSentinel) throw FormatError("text section lacks sentinel");
  return t;
}

namespace {

// SA-IS after Nong, Zhang and Chan. s[n-1] is the unique smallest symbol 0.
class InducedSorter {
 public:
  static void run(std::span<const std::int32_t> s, std::span<std::int32_t> sa, std::int32_t alphabet) {
    const auto n = static_cast<std::int64_t>(s.size());
    if (n == 1) {
      sa[0] = 0;
      return;
    }
    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[n - 1] = true;
    stype[n - 2] = false;
    for (std::int64_t i = n - 3; i >= 0; --i) {
      stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](std::int64_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int32_t> bucket(static_cast<std::size_t>(alphabet) + 1);
    auto bucket_ends = [&](bool ends) {
      std::fill(bucket.begin(), bucket.end(), 0);
      for (std::int32_t c : s) ++bucket[c];
      std::int32_t sum = 0;
      for (auto& b : bucket) {
        sum += b;
        b = ends ? sum : sum - b;
      }
    };
    auto induce = [&]() {
      bucket_ends(false);
      for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t j = static_cast<std::int64_t>(sa[i]) - 1;
        if (sa[i] > 0 && !stype[j]) sa[bucket[s[j]]++] = static_cast<std::int32_t>(j);
      }
      bucket_ends(true);
      for (std::int64_t i = n - 1; i >= 0; --i) {
        const std::int64_t j = static_cast<std::int64_t>(sa[i]) - 1;
        if (sa[i] > 0 && stype[j]) sa[--bucket[s[j]]] = static_cast<std::int32_t>(j);
      }
    };

    // Stage 1: sort LMS substrings.
    bucket_ends(true);
    std::fill(sa.begin(), sa.end(), -1);
    for (std::int64_t i = 1; i < n; ++i) {
      if (is_lms(i)) sa[--bucket[s[i]]] = static_cast<std::int32_t>(i);
    }
    induce();

    std::int64_t n1 = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      if (is_lms(sa[i])) sa[n1++] = sa[i];
    }
    std::fill(sa.begin() + n1, sa.end(), -1);
    std::int32_t names = 0;
    std::int64_t prev = -1;
    for (std::int64_t i = 0; i < n1; ++i) {
      const std::int64_t pos = sa[i];
      bool diff = false;
      for (std::int64_t d = 0; d < n; ++d) {
        if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
          diff = true;
          break;
        }
        if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
      }
      if (diff) {
        ++names;
        prev = pos;
      }
      sa[n1 + pos / 2] = names - 1;
    }
    for (std::int64_t i = n - 1, j = n - 1; i >= n1; --i) {
      if (sa[i] >= 0) sa[j--] = sa[i];
    }

    // Stage 2: solve the reduced problem.
    auto sa1 = sa.subspan(0, static_cast<std::size_t>(n1));
    auto s1 = sa.subspan(static_cast<std::size_t>(n - n1), static_cast<std::size_t>(n1));
    if (names < n1) {
      std::vector<std::int32_t> reduced(s1.begin(), s1.end());
      run(reduced, sa1, names);
    } else {
      for (std::int64_t i = 0; i < n1; ++i) sa1[s1[i]] = static_cast<std::int32_t>(i);
    }

    // Stage 3: induce the full order from sorted LMS suffixes.
    bucket_ends(true);
    for (std::int64_t i = 1, j = 0; i < n; ++i) {
      if (is_lms(i)) s1[j++] = static_cast<std::int32_t>(i);
    }
    for (std::int64_t i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
    std::fill(sa.begin() + n1, sa.end(), -1);
    for (std::int64_t i = n1 - 1; i >= 0; --i) {
      const std::int32_t j = sa[i];
      sa[i] = -1;
      sa[--bucket[s[j]]] = j;
    }
    induce();
  }
};

}  // namespace

std::vector<Pos> suffix_array_sais(std::span<const std::uint8_t> s) {
  std::vector<std::int32_t> sym(s.begin(), s.end());
  std::vector<std::int32_t> sa(s.size());
  InducedSorter::run(sym, sa, 256);
  return {sa.begin(), sa.end()};
}

SuffixArrayBundle build_suffix_arrays(const Text& text) {
  const Pos n = text.size();
  SuffixArrayBundle b;
  b.sa = suffix_array_sais(text.bytes());
  b.isa.resize(n);
  for (Pos i = 0; i < n; ++i) b.isa[b.sa[i]] = i;

  // PLCP by the Phi method, then LCP by permutation.
  std::vector<Pos> phi(n);
  phi[b.sa[0]] = kNoPos;
  for (Pos i = 1; i < n; ++i) phi[b.sa[i]] = b.sa[i - 1];
  b.plcp_pred.assign(n, 0);
  Pos h = 0;
  for (Pos p = 0; p < n; ++p) {
    if (phi[p] == kNoPos) {
      h = 0;
      continue;
    }
    const Pos q = phi[p];
    while (p + h < n && q + h < n && text[p + h] == text[q + h]) ++h;
    b.plcp_pred[p] = h;
    if (h > 0) --h;
  }
  b.lcp.resize(n);
  for (Pos i = 0; i < n; ++i) b.lcp[i] = b.plcp_pred[b.sa[i]];
  b.plcp_succ.resize(n);
  for (Pos p = 0; p < n; ++p) b.plcp_succ[p] = b.isa[p] + 1 < n ? b.lcp[b.isa[p] + 1] : 0;

  b.bwt.resize(n);
  for (Pos i = 0; i < n; ++i) b.bwt[i] = b.sa[i] != 0 ? text[b.sa[i] - 1] : text[n - 1];
  return b;
}

std::uint64_t SuffixArrayBundle::memory_words() const {
  return (sa.size() + isa.size() + lcp.size() + plcp_pred.size() + plcp_succ.size()) / 2 + bwt.size() / 8;
}

void SuffixArrayBundle::save(Writer& w) const {
  w.vec(sa);
  w.vec(lcp);
  w.vec(bwt);
}

SuffixArrayBundle SuffixArrayBundle::load(Reader& r) {
  SuffixArrayBundle b;
  b.sa = r.vec<Pos>();
  b.lcp = r.vec<Pos>();
  b.bwt = r.vec<std::uint8_t>();
  const auto n = static_cast<Pos>(b.sa.size());
  if (b.lcp.size() != n || b.bwt.size() != n) throw FormatError("suffix array section sizes disagree");
  b.isa.resize(n);
  for (Pos i = 0; i < n; ++i) {
    if (b.sa[i] >= n) throw FormatError("suffix array entry out of range");
    b.isa[b.sa[i]] = i;
  }
  b.plcp_pred.resize(n);
  b.plcp_succ.resize(n);
  for (Pos p = 0; p < n; ++p) {
    b.plcp_pred[p] = b.lcp[b.isa[p]];
    b.plcp_succ[p] = b.isa[p] + 1 < n ? b.lcp[b.isa[p] + 1] : 0;
  }
  return b;
}

}  // namespace locus
