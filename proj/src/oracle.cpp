#include "locus/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string_view>
#include <tuple>

namespace locus::oracle {

std::vector<Pos> naive_sa(std::span<const std::uint8_t> text) {
  const std::string_view s(reinterpret_cast<const char*>(text.data()), text.size());
  std::vector<Pos> sa(text.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](Pos a, Pos b) {
    const auto x = s.substr(a);
    const auto y = s.substr(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](char c, char d) { return static_cast<unsigned char>(c) < static_cast<unsigned char>(d); });
  });
  return sa;
}

NaiveModel::NaiveModel(std::string_view raw) : n_(static_cast<Pos>(raw.size() + 1)) {
  text_.assign(raw.begin(), raw.end());
  text_.push_back(0);
  sa_ = naive_sa(text_);
  rank_.resize(n_);
  for (Pos i = 0; i < n_; ++i) rank_[sa_[i]] = i;
  bwt_.resize(n_);
  for (Pos i = 0; i < n_; ++i) bwt_[i] = sa_[i] == 0 ? text_[n_ - 1] : text_[sa_[i] - 1];

  lcp_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (Pos p = n_; p-- > 0;) {
    for (Pos q = n_; q-- > 0;) {
      if (text_[p] != text_[q]) continue;
      const std::uint16_t next = (p + 1 < n_ && q + 1 < n_) ? lcp_[static_cast<std::size_t>(p + 1) * n_ + q + 1] : 0;
      lcp_[static_cast<std::size_t>(p) * n_ + q] = static_cast<std::uint16_t>(next + 1);
    }
  }

  auto bwt_of = [&](Pos x) { return x == 0 ? text_[n_ - 1] : text_[x - 1]; };
  for (Direction d : kBothDirections) {
    const int k = dir_index(d);
    irr_[k].assign(n_, 0);
    ell_[k].assign(n_, 0);
    r_[k].assign(n_, kNoPos);
    c_[k].assign(n_, 0);
    parent_[k].assign(n_, kNoPos);
    for (Pos p = 0; p < n_; ++p) {
      const Pos i = dir_rank(p, d);
      if (i == 0) {
        irr_[k][p] = 1;
        continue;
      }
      const Pos prev = suffix_at(i - 1, d);
      irr_[k][p] = bwt_of(prev) != bwt_of(p);
      ell_[k][p] = lcp(prev, p);
    }
    for (Pos p = 0; p < n_; ++p) {
      if (irr_[k][p]) {
        r_[k][p] = p;
        c_[k][p] = ell_[k][p];
        continue;
      }
      // Longest overlap; the preceding side wins ties, then the closer rank.
      const Pos i = dir_rank(p, d);
      Pos best = kNoPos;
      auto key = [&](Pos q) {
        const Pos j = dir_rank(q, d);
        const bool before = j < i;
        const Pos dist = before ? i - j : j - i;
        return std::tuple<Pos, int, Pos>(lcp(p, q), before ? 1 : 0, n_ - dist);
      };
      for (Pos q = 0; q < n_; ++q) {
        if (irr_[k][q] && (best == kNoPos || key(q) > key(best))) best = q;
      }
      r_[k][p] = best;
      c_[k][p] = lcp(p, best);
    }
    for (Pos p = 0; p < n_; ++p) {
      if (irr_[k][p]) continue;
      const Pos base = itree_base(p, d);
      for (Pos q = p; q-- > base;) {
        if (itree_weight(q, d) > itree_weight(p, d)) {
          parent_[k][p] = q;
          break;
        }
      }
    }
  }
}

std::vector<bool> NaiveModel::bp(Pos p, Direction d) const {
  const Pos len = ell(p, d);
  std::vector<bool> out(len, false);
  const Pos i = dir_rank(p, d);
  for (Pos j = 0; j < i; ++j) {
    const Pos x = lcp(p, suffix_at(j, d));
    if (x < len) out[x] = true;
  }
  return out;
}

std::uint32_t NaiveModel::count_at_least(Pos p, Pos ell, Direction d) const {
  std::set<Pos> depths;
  const Pos i = dir_rank(p, d);
  for (Pos j = 0; j < i; ++j) {
    const Pos x = lcp(p, suffix_at(j, d));
    if (x >= ell) depths.insert(x);
  }
  return static_cast<std::uint32_t>(depths.size());
}

NodeSig NaiveModel::locus(Pos p, Pos q) const {
  const Pos len = q - p + 1;
  Pos lo = kNoPos;
  Pos hi = 0;
  for (Pos i = 0; i < n_; ++i) {
    if (lcp(sa_[i], p) >= len) {
      lo = std::min(lo, i);
      hi = i;
    }
  }
  const Pos depth = lo == hi ? n_ - sa_[lo] : lcp(sa_[lo], sa_[hi]);
  return {depth, lo, hi};
}

Pos NaiveModel::itree_base(Pos p, Direction d) const {
  while (!irreducible(p, d)) --p;
  return p;
}

Weight NaiveModel::itree_weight(Pos p, Direction d) const {
  if (irreducible(p, d)) return kInfiniteWeight;
  return static_cast<Weight>(p - itree_base(p, d) + overlap(p, d));
}

Pos NaiveModel::weighted_ancestor(Pos p, Weight w, Direction d) const {
  const Pos base = itree_base(p, d);
  const std::int64_t len = static_cast<std::int64_t>(w) - (p - base);
  const std::int64_t m = static_cast<std::int64_t>(ell(p, d)) - len;
  for (Pos t = p;; --t) {
    if (static_cast<std::int64_t>(ell(t, d)) - m <= static_cast<std::int64_t>(overlap(t, d))) return t;
    if (t == base) return kNoPos;
  }
}

std::vector<NodeSig> trie_signatures(const NaiveModel& m) {
  struct TrieNode {
    Pos depth = 0;
    Pos suffix = kNoPos;
    std::map<std::uint8_t, std::uint32_t> next;
  };
  std::vector<TrieNode> trie(1);
  const Pos n = m.size();
  for (Pos p = 0; p < n; ++p) {
    std::uint32_t v = 0;
    for (Pos i = p; i < n; ++i) {
      const auto it = trie[v].next.find(m.at(i));
      if (it != trie[v].next.end()) {
        v = it->second;
        continue;
      }
      const auto id = static_cast<std::uint32_t>(trie.size());
      trie[v].next.emplace(m.at(i), id);
      trie.push_back({trie[v].depth + 1, kNoPos, {}});
      v = id;
    }
    trie[v].suffix = p;
  }
  // Children always get larger ids, so a reverse sweep is bottom-up.
  std::vector<Pos> lo(trie.size(), kNoPos);
  std::vector<Pos> hi(trie.size(), 0);
  for (std::size_t v = trie.size(); v-- > 0;) {
    if (trie[v].suffix != kNoPos) lo[v] = hi[v] = m.rank()[trie[v].suffix];
    for (const auto& [sym, c] : trie[v].next) {
      lo[v] = std::min(lo[v], lo[c]);
      hi[v] = std::max(hi[v], hi[c]);
    }
  }
  std::vector<NodeSig> out;
  for (std::size_t v = 0; v < trie.size(); ++v) {
    if (v == 0 || trie[v].next.size() != 1) out.push_back({trie[v].depth, lo[v], hi[v]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSig> tree_signatures(const SuffixTree& t) {
  std::vector<NodeSig> out;
  for (NodeId v = 0; v < t.node_count(); ++v) out.push_back({t.string_depth(v), t.lo(v), t.hi(v)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> branch_list(const SuffixTree& t, NodeId v, Direction d) {
  std::vector<NodeId> out;
  for (NodeId c = v; c != t.root(); c = t.parent(c)) {
    const NodeId u = t.parent(c);
    const auto kids = t.children(u);
    const NodeId edge = d == Direction::kLeft ? kids.front() : kids.back();
    if (edge != c) out.push_back(u);
  }
  return out;
}

namespace {

template <bool kReadAll>
NodeId descend_impl(const SuffixTree& t, std::span<const std::uint8_t> text, std::span<const Pos> sa, Pos p, Pos q) {
  const Pos len = q - p + 1;
  NodeId v = t.root();
  while (t.string_depth(v) < len) {
    const Pos d = t.string_depth(v);
    NodeId next = kNoNode;
    for (NodeId c : t.children(v)) {
      if (text[sa[t.lo(c)] + d] == text[p + d]) {
        next = c;
        break;
      }
    }
    if (next == kNoNode) return kNoNode;
    if constexpr (kReadAll) {
      const Pos start = sa[t.lo(next)];
      const Pos stop = std::min(t.string_depth(next), len);
      for (Pos i = d + 1; i < stop; ++i) {
        if (text[start + i] != text[p + i]) return kNoNode;
      }
    }
    v = next;
  }
  return v;
}

}  // namespace

NodeId descend(const SuffixTree& t, std::span<const std::uint8_t> text, std::span<const Pos> sa, Pos p, Pos q) {
  return descend_impl<true>(t, text, sa, p, q);
}

NodeId descend_skip(const SuffixTree& t, std::span<const std::uint8_t> text, std::span<const Pos> sa, Pos p, Pos q) {
  return descend_impl<false>(t, text, sa, p, q);
}

}  // namespace locus::oracle
