#include "locus/irreducible.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "locus/serialize.hpp"

namespace locus {

BitArray mark_irreducible(const DirectionalArrays& view) {
  BitArray flags(view.size());
  for (Pos i = 0; i < view.size(); ++i) {
    if (view.irreducible_rank(i)) flags.set(view.sa(i));
  }
  return flags;
}

std::uint64_t irreducible_lcp_sum(const DirectionalArrays& view) {
  std::uint64_t sum = 0;
  for (Pos i = 0; i < view.size(); ++i) {
    if (view.irreducible_rank(i)) sum += view.lcp(i);
  }
  return sum;
}

IrreducibleStore::IrreducibleStore(const SuffixTree& tree, const DirectionalArrays& view)
    : dir_(view.direction()), flags_(mark_irreducible(view)) {
  const Pos n = view.size();
  offsets_.reserve(flags_.total_ones() + 1);
  offsets_.push_back(0);
  for (Pos p = 0; p < n; ++p) {
    if (flags_.bits().get(p)) offsets_.push_back(offsets_.back() + view.plcp(p));
  }
  const std::uint64_t total = offsets_.back();
  const double bound = 2.0 * n * std::log2(static_cast<double>(n));
  if (static_cast<double>(total) > bound) {
    throw std::logic_error("irreducible LCP sum " + std::to_string(total) + " exceeds 2 n log n");
  }

  // Depth-first traversal in this direction's order. `work` marks the depths
  // of branching ancestors of the current node; bits at and above the current
  // node's depth are zero whenever a frame starts.
  BitArray out(total);
  BitArray work(n + 1);
  const bool left = dir_ == Direction::kLeft;
  struct Frame {
    NodeId v;
    std::uint32_t next;
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto kids = tree.children(f.v);
    const Pos depth = tree.string_depth(f.v);
    if (f.next == kids.size()) {
      work.reset(depth);
      stack.pop_back();
      continue;
    }
    const std::uint32_t j = f.next++;
    const NodeId c = left ? kids[j] : kids[kids.size() - 1 - j];
    work.assign(depth, j > 0);
    if (j > 0) {
      // The pair (previous child, c) owns the LCP entry at c's first leaf in
      // this order; copy out when that entry is irreducible.
      const Pos first_rank = left ? tree.lo(c) : tree.hi(c);
      const Pos p = view.sa(left ? first_rank : n - 1 - first_rank);
      if (flags_.bits().get(p)) {
        assert(view.plcp(p) == depth);
        const std::uint64_t k = flags_.rank1(p);
        out.write_bits(offsets_[k], work.words(), depth);
      }
    }
    if (!tree.is_leaf(c)) stack.push_back({c, 0});
  }
  bits_ = RankIndex(std::move(out));
}

std::vector<bool> IrreducibleStore::bits_of(Pos p) const {
  if (!is_irreducible(p)) throw std::logic_error("b_p requested for a non-irreducible position");
  const std::uint64_t k = flags_.rank1(p);
  std::vector<bool> out;
  for (std::uint64_t i = offsets_[k]; i < offsets_[k + 1]; ++i) out.push_back(bits_.bits().get(i));
  return out;
}

void IrreducibleStore::save(Writer& w) const {
  w.u8(static_cast<std::uint8_t>(dir_));
  flags_.save(w);
  w.vec(offsets_);
  bits_.save(w);
}

IrreducibleStore IrreducibleStore::load(Reader& r) {
  IrreducibleStore s;
  s.dir_ = static_cast<Direction>(r.u8());
  s.flags_ = RankIndex::load(r);
  s.offsets_ = r.vec<std::uint64_t>();
  s.bits_ = RankIndex::load(r);
  if (s.offsets_.size() != s.flags_.total_ones() + 1 || s.offsets_.back() != s.bits_.size()) {
    throw FormatError("irreducible store sizes disagree");
  }
  return s;
}

NeighbourTable::NeighbourTable(const SuffixTree& tree, const DirectionalArrays& view, const IrreducibleStore& store) {
  const Pos n = view.size();
  // Nearest irreducible ranks at or before / at or after each rank.
  std::vector<Pos> before(n);
  std::vector<Pos> after(n);
  Pos last = 0;
  for (Pos i = 0; i < n; ++i) {
    if (view.irreducible_rank(i)) last = i;
    before[i] = last;
  }
  Pos next = kNoPos;
  for (Pos i = n; i-- > 0;) {
    if (view.irreducible_rank(i)) next = i;
    after[i] = next;
  }
  auto original = [&](Pos i) { return view.direction() == Direction::kLeft ? i : n - 1 - i; };

  r_.resize(n);
  c_.resize(n);
  for (Pos p = 0; p < n; ++p) {
    if (store.is_irreducible(p)) {
      r_[p] = p;
      c_[p] = view.plcp(p);
      continue;
    }
    const Pos i = view.isa(p);
    const Pos lo_rank = before[i];
    const Pos lo_lcp = tree.lcp_of_ranks(original(lo_rank), original(i));
    if (after[i] == kNoPos) {
      r_[p] = view.sa(lo_rank);
      c_[p] = lo_lcp;
      continue;
    }
    const Pos hi_lcp = tree.lcp_of_ranks(original(after[i]), original(i));
    if (lo_lcp >= hi_lcp) {
      r_[p] = view.sa(lo_rank);
      c_[p] = lo_lcp;
    } else {
      r_[p] = view.sa(after[i]);
      c_[p] = hi_lcp;
    }
  }
}

void NeighbourTable::save(Writer& w) const {
  w.vec(r_);
  w.vec(c_);
}

NeighbourTable NeighbourTable::load(Reader& r) {
  NeighbourTable t;
  t.r_ = r.vec<Pos>();
  t.c_ = r.vec<Pos>();
  if (t.r_.size() != t.c_.size()) throw FormatError("neighbour table sizes disagree");
  return t;
}

}  // namespace locus
