#include "locus/locus_index.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "locus/irreducible.hpp"
#include "locus/serialize.hpp"

namespace locus {

struct LocusIndex::Impl {
  Text text;
  SuffixArrayBundle arrays;
  SuffixTree tree;
  BranchingIndex branching[2];
  IrreducibleStore store[2];
  NeighbourTable table[2];
  ITreeForest forest[2];

  DirectionalArrays view(Direction d) const { return DirectionalArrays(arrays, d); }

  void build_rest(const BuildOptions& options) {
    for (Direction d : kBothDirections) {
      const int k = dir_index(d);
      branching[k] = BranchingIndex(tree, d);
      store[k] = IrreducibleStore(tree, view(d));
      table[k] = NeighbourTable(tree, view(d), store[k]);
      forest[k] = ITreeForest(view(d), store[k], table[k], ForestOptions{options.share_ahat});
    }
  }

  // Branching nodes at depth >= lo on the path of x, where x is not
  // irreducible and lo <= c_x. Splits at u = lca(x, r_x): nodes from the leaf
  // up to u come from precomputed counts, nodes above u from b_{r_x}.
  template <class Probe>
  std::uint32_t via_neighbour(Pos x, std::int64_t lo, int k, Probe& probe) const {
    const Pos r = table[k].neighbour(x);
    const Pos c = table[k].overlap(x);
    probe.tick(Op::kArrayRead);
    const NodeId lx = arrays.isa[x];
    const NodeId lr = arrays.isa[r];
    probe.tick(Op::kLca);
    const NodeId u = tree.lca(lx, lr);
    probe.tick(Op::kArrayRead);
    auto count = branching[k].branch_count(lx) - branching[k].branch_count(u);
    probe.tick(Op::kRank);
    count += static_cast<std::uint32_t>(store[k].count_ones_unchecked(r, lo, static_cast<std::int64_t>(c) - 1));
    // b_r stops short of its own lowest branching node at depth ell_r, which
    // lies on x's path too whenever it is above u.
    const std::int64_t ell_r = static_cast<std::int64_t>(store[k].length(r));
    probe.tick(Op::kArrayRead);
    if (lo <= ell_r && ell_r < c && view(static_cast<Direction>(k)).has_side_neighbour(r)) ++count;
    return count;
  }

  template <class Probe>
  std::uint32_t count_at_least(Pos p, Pos ell, Direction d, Probe& probe) const {
    const int k = dir_index(d);
    const auto dv = view(d);
    probe.tick(Op::kArrayRead);
    const Pos ell_p = dv.plcp(p);
    if (ell > ell_p) return 0;
    probe.tick(Op::kArrayRead);
    if (store[k].is_irreducible(p)) {
      probe.tick(Op::kRank);
      return static_cast<std::uint32_t>(store[k].count_ones_unchecked(p, ell, static_cast<std::int64_t>(ell_p) - 1)) + 1;
    }
    probe.tick(Op::kArrayRead);
    const Pos c = table[k].overlap(p);
    if (ell <= c) return via_neighbour(p, ell, k, probe);

    const ITreeForest& f = forest[k];
    const Pos base = f.base(p);
    const Weight w = static_cast<Weight>(ell + p - base);
    const Pos t = f.weighted_ancestor(p, w, probe);
    const std::int64_t lo = static_cast<std::int64_t>(ell) + p - t;
    if (t == base) {
      probe.tick(Op::kRank);
      const std::int64_t ell_t = static_cast<std::int64_t>(store[k].length(t));
      return static_cast<std::uint32_t>(store[k].count_ones_unchecked(t, lo, ell_t - 1)) + 1;
    }
    return via_neighbour(t, lo, k, probe);
  }

  template <class Probe>
  NodeId locus(Pos p, Pos q, Probe& probe) const {
    if (p > q || q >= text.size()) {
      throw std::out_of_range("invalid substring [" + std::to_string(p) + ", " + std::to_string(q) + "]");
    }
    const Pos ell = q - p + 1;
    const auto cl = count_at_least(p, ell, Direction::kLeft, probe);
    const auto cr = count_at_least(p, ell, Direction::kRight, probe);
    probe.tick(Op::kArrayRead);
    const NodeId leaf = arrays.isa[p];
    if (cl == 0 && cr == 0) return leaf;
    NodeId best = kNoNode;
    if (cl > 0) {
      probe.tick(Op::kLevelAncestor);
      best = branching[0].nth_branching_ancestor_unchecked(leaf, cl);
    }
    if (cr > 0) {
      probe.tick(Op::kLevelAncestor);
      const NodeId v = branching[1].nth_branching_ancestor_unchecked(leaf, cr);
      probe.tick(Op::kCompare);
      if (best == kNoNode || tree.string_depth(v) < tree.string_depth(best)) best = v;
    }
    return best;
  }
};

LocusIndex::LocusIndex() : impl_(std::make_unique<Impl>()) {}
LocusIndex::LocusIndex(LocusIndex&&) noexcept = default;
LocusIndex& LocusIndex::operator=(LocusIndex&&) noexcept = default;
LocusIndex::~LocusIndex() = default;

LocusIndex LocusIndex::build(std::span<const std::uint8_t> raw, BuildOptions options) {
  LocusIndex idx;
  Impl& m = *idx.impl_;
  m.text = Text::from_bytes(raw);
  m.arrays = build_suffix_arrays(m.text);
  m.tree = SuffixTree(m.arrays);
  m.build_rest(options);
  return idx;
}

LocusIndex LocusIndex::build(std::string_view raw, BuildOptions options) {
  return build(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), options);
}

Pos LocusIndex::size() const { return impl_->text.size(); }
const Text& LocusIndex::text() const { return impl_->text; }
const SuffixArrayBundle& LocusIndex::arrays() const { return impl_->arrays; }
const SuffixTree& LocusIndex::tree() const { return impl_->tree; }
const BranchingIndex& LocusIndex::branching(Direction d) const { return impl_->branching[dir_index(d)]; }
const IrreducibleStore& LocusIndex::store(Direction d) const { return impl_->store[dir_index(d)]; }
const NeighbourTable& LocusIndex::neighbours(Direction d) const { return impl_->table[dir_index(d)]; }
const ITreeForest& LocusIndex::forest(Direction d) const { return impl_->forest[dir_index(d)]; }

NodeId LocusIndex::locus(Pos p, Pos q) const {
  NullProbe probe;
  return impl_->locus(p, q, probe);
}

NodeId LocusIndex::locus_counted(Pos p, Pos q, CountingProbe& probe) const { return impl_->locus(p, q, probe); }

std::uint32_t LocusIndex::count_branching_at_least(Pos p, Pos ell, Direction d) const {
  if (p >= size() || ell == 0 || ell > size() - p) throw std::out_of_range("invalid (p, ell)");
  NullProbe probe;
  return impl_->count_at_least(p, ell, d, probe);
}

NodeId LocusIndex::leaf_of(Pos p) const { return impl_->arrays.isa.at(p); }
Pos LocusIndex::string_depth(NodeId v) const { return impl_->tree.string_depth(v); }

Label LocusIndex::label(NodeId v) const {
  return {impl_->arrays.sa[impl_->tree.lo(v)], impl_->tree.string_depth(v)};
}

IndexStats LocusIndex::stats() const {
  const Impl& m = *impl_;
  IndexStats s;
  s.n = size();
  s.nodes = m.tree.node_count();
  std::uint64_t words = m.arrays.memory_words() + m.tree.memory_words() + (m.text.size() + 7) / 8;
  for (Direction d : kBothDirections) {
    const int k = dir_index(d);
    s.irreducible_count[k] = m.store[k].irreducible_count();
    s.irreducible_sum[k] = m.store[k].total_bits();
    s.forest[k] = m.forest[k].stats();
    words += m.branching[k].memory_words() + m.store[k].memory_words() + m.table[k].memory_words() +
             m.forest[k].memory_words();
  }
  s.words = words;
  s.words_per_symbol = static_cast<double>(words) / static_cast<double>(s.n);
  return s;
}


void LocusIndex::save(std::ostream& out) const {
  const Impl& m = *impl_;
  IndexFileWriter file(out, size());
  auto put = [&](const char(&tag)[5], auto&& fill) {
    Writer w;
    fill(w);
    file.section(section_tag(tag), w);
  };
  put("TEXT", [&](Writer& w) { m.text.save(w); });
  put("ARRS", [&](Writer& w) { m.arrays.save(w); });
  put("TREE", [&](Writer& w) { m.tree.save(w); });
  put("IRRL", [&](Writer& w) { m.store[0].save(w); });
  put("IRRR", [&](Writer& w) { m.store[1].save(w); });
  put("NBRL", [&](Writer& w) { m.table[0].save(w); });
  put("NBRR", [&](Writer& w) { m.table[1].save(w); });
  put("FORL", [&](Writer& w) { m.forest[0].save(w); });
  put("FORR", [&](Writer& w) { m.forest[1].save(w); });
}

LocusIndex LocusIndex::load(std::istream& in) {
  IndexFileReader file(in);
  LocusIndex idx;
  Impl& m = *idx.impl_;
  auto get = [&](const char(&tag)[5], auto&& read) {
    Reader r(file.section(section_tag(tag)));
    read(r);
    if (!r.done()) throw FormatError(std::string("trailing bytes in section ") + tag);
  };
  get("TEXT", [&](Reader& r) { m.text = Text::load(r); });
  get("ARRS", [&](Reader& r) { m.arrays = SuffixArrayBundle::load(r); });
  get("TREE", [&](Reader& r) { m.tree = SuffixTree::load(r, m.arrays); });
  get("IRRL", [&](Reader& r) { m.store[0] = IrreducibleStore::load(r); });
  get("IRRR", [&](Reader& r) { m.store[1] = IrreducibleStore::load(r); });
  get("NBRL", [&](Reader& r) { m.table[0] = NeighbourTable::load(r); });
  get("NBRR", [&](Reader& r) { m.table[1] = NeighbourTable::load(r); });
  get("FORL", [&](Reader& r) { m.forest[0] = ITreeForest::load(r); });
  get("FORR", [&](Reader& r) { m.forest[1] = ITreeForest::load(r); });
  const Pos n = m.text.size();
  if (file.n() != n || m.arrays.size() != n || m.tree.leaf_count() != n || m.table[0].size() != n ||
      m.table[1].size() != n || m.forest[0].size() != n || m.forest[1].size() != n) {
    throw FormatError("index sections disagree on text length");
  }
  for (Direction d : kBothDirections) m.branching[dir_index(d)] = BranchingIndex(m.tree, d);
  return idx;
}

}  // namespace locus
