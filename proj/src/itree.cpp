#include "locus/itree.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "locus/serialize.hpp"

namespace locus {

struct ITreeForest::Builder {
  ITreeForest& f;
  const NeighbourTable& table;
  const IrreducibleStore& store;
  BitArray bits;

  Weight ell(Pos base) const { return static_cast<Weight>(store.length(base)); }

  // Owned array over the first `enc` weights of a path. Returns its id.
  std::int32_t build_array(std::uint32_t path, std::uint32_t enc, AhatKind kind) {
    const auto w = f.path_weights(path);
    const Weight origin = w[0];
    const Weight span = w[enc - 1] - origin;
    const std::uint64_t len = static_cast<std::uint64_t>(span / kGranularity) + 1;
    const std::uint64_t off = bits.size();
    bits.resize(off + len);
    for (std::uint32_t j = 0; j < enc; ++j) bits.set(off + static_cast<std::uint64_t>((w[j] - origin) / kGranularity));
    const auto id = static_cast<std::int32_t>(f.ahat_kind_.size());
    f.ahat_offset_.push_back(off);
    f.ahat_origin_.push_back(origin);
    f.ahat_span_.push_back(span);
    f.ahat_kind_.push_back(static_cast<std::uint8_t>(kind));
    f.stats_.owned_arrays++;
    f.stats_.owned_bits += len;
    switch (kind) {
      case AhatKind::kRootPath: f.stats_.root_arrays++; break;
      case AhatKind::kSlot: f.stats_.slot_arrays++; break;
      case AhatKind::kFallback: f.stats_.fallback_arrays++; break;
      case AhatKind::kUnshared: break;
    }
    return id;
  }

  // Array of the heavy path through the h-th child of root R, or -1.
  std::int32_t find_source(Pos root, std::uint32_t h, bool& heavy) {
    const auto kids = f.children(root);
    if (h == 0 || h > kids.size()) return -1;
    const Pos z = kids[h - 1];
    heavy = f.path_id_[z] == f.path_id_[root];
    if (heavy) return f.path_ahat_[f.path_id_[root]];
    if (f.slot_[z] < 0) {
      const std::uint32_t path = f.path_id_[z];
      if (f.path_m_[path] == 0) return -1;
      f.slot_[z] = build_array(path, f.path_m_[path], AhatKind::kSlot);
    }
    return f.slot_[z];
  }

  void assign(std::uint32_t path, std::int32_t id, std::uint32_t enc, bool owns) {
    f.path_ahat_[path] = id;
    f.path_encoded_[path] = enc;
    f.path_owns_[path] = owns ? 1 : 0;
  }

  void own(std::uint32_t path, AhatKind kind) {
    const std::uint32_t m = f.path_m_[path];
    assign(path, build_array(path, m, kind), m, true);
  }

  void preprocess(std::uint32_t path, bool share) {
    const std::uint32_t m = f.path_m_[path];
    if (m <= 2) return;
    if (!share) {
      own(path, AhatKind::kUnshared);
      return;
    }
    const auto nodes = f.path_nodes(path);
    const auto w = f.path_weights(path);
    const std::size_t k = nodes.size();
    const Pos top = nodes[k - 1];
    const Pos base = f.base_[top];
    const Pos r = table.neighbour(top);
    const Weight last = w[m - 3];  // largest weight the shared array must cover

    Weight shift = static_cast<Weight>(top - base);
    std::int32_t src = -1;
    ShareCase how = ShareCase::kSmallEll;
    bool heavy = false;
    if (ell(r) >= last - shift) {
      src = find_source(r, f.ordinal_[nodes[k - 2]], heavy);
      how = heavy ? ShareCase::kHeavyRoot : ShareCase::kLightSlot;
    } else {
      const Pos pbar = nodes[k - 2];
      const Pos rbar = table.neighbour(pbar);
      shift = static_cast<Weight>(pbar - base);
      if (ell(rbar) < w[m - 2] - shift) f.stats_.case3_precondition_failures++;
      src = find_source(rbar, f.ordinal_[nodes[k - 3]], heavy);
    }
    if (src < 0 || f.ahat_origin_[src] + shift != w[0] || f.ahat_span_[src] < last - w[0]) {
      own(path, AhatKind::kFallback);
      return;
    }
    assign(path, src, m - 2, false);
    f.path_case_[path] = static_cast<std::uint8_t>(how);
    f.stats_.shared_paths++;
    switch (how) {
      case ShareCase::kHeavyRoot: f.stats_.case_heavy++; break;
      case ShareCase::kLightSlot: f.stats_.case_light++; break;
      case ShareCase::kSmallEll: f.stats_.case_small++; break;
      case ShareCase::kNone: break;
    }
  }
};

ITreeForest::ITreeForest(const DirectionalArrays& view, const IrreducibleStore& store, const NeighbourTable& table,
                         ForestOptions options) {
  const Pos n = view.size();
  base_.resize(n);
  weight_.resize(n);
  parent_.assign(n, kNoPos);
  ordinal_.assign(n, 0);
  size_.assign(n, 1);
  slot_.assign(n, -1);

  // Parents by the previous-greater rule, one stack per run.
  std::vector<Pos> stack;
  std::vector<std::uint32_t> kid_count(n, 0);
  Pos base = 0;
  for (Pos r = 0; r < n; ++r) {
    if (store.is_irreducible(r)) {
      base = r;
      stack.clear();
      weight_[r] = kInfiniteWeight;
      stats_.trees++;
    } else {
      weight_[r] = static_cast<Weight>(r - base + table.overlap(r));
      while (weight_[stack.back()] <= weight_[r]) stack.pop_back();
      parent_[r] = stack.back();
      ordinal_[r] = ++kid_count[parent_[r]];
    }
    base_[r] = base;
    stack.push_back(r);
  }
  assert(n == 0 || store.is_irreducible(0));

  child_begin_.assign(n + 1, 0);
  for (Pos r = 0; r < n; ++r) child_begin_[r + 1] = child_begin_[r] + kid_count[r];
  children_.resize(n - stats_.trees);
  for (Pos r = 0; r < n; ++r) {
    if (parent_[r] != kNoPos) children_[child_begin_[parent_[r]] + ordinal_[r] - 1] = r;
  }
  for (Pos r = n; r-- > 0;) {
    if (parent_[r] != kNoPos) size_[parent_[r]] += size_[r];
  }

  // Heavy paths, numbered by top position; stored bottom-up.
  std::vector<Pos> heavy(n, kNoPos);
  for (Pos r = 0; r < n; ++r) {
    if (parent_[r] != kNoPos && 2 * static_cast<std::uint64_t>(size_[r]) > size_[parent_[r]]) heavy[parent_[r]] = r;
  }
  path_id_.assign(n, 0);
  path_begin_.push_back(0);
  std::vector<Pos> chain;
  for (Pos r = 0; r < n; ++r) {
    const bool top = parent_[r] == kNoPos || heavy[parent_[r]] != r;
    if (!top) continue;
    const auto id = static_cast<std::uint32_t>(path_begin_.size() - 1);
    chain.clear();
    for (Pos v = r; v != kNoPos; v = heavy[v]) chain.push_back(v);
    const Weight limit = static_cast<Weight>(store.length(base_[r]));
    std::uint32_t m = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      path_id_[*it] = id;
      path_nodes_.push_back(*it);
      path_weights_.push_back(weight_[*it]);
      if (weight_[*it] <= limit) ++m;
    }
    path_begin_.push_back(static_cast<std::uint32_t>(path_nodes_.size()));
    path_m_.push_back(m);
  }
  const std::uint32_t paths = path_count();
  stats_.paths = paths;
  path_encoded_.assign(paths, 0);
  path_ahat_.assign(paths, -1);
  path_owns_.assign(paths, 0);
  path_case_.assign(paths, 0);

  // Marked lists. A path's parent path has a smaller id, so it is complete.
  marked_begin_.push_back(0);
  for (std::uint32_t id = 0; id < paths; ++id) {
    const Pos top = path_nodes(id).back();
    marked_weights_.push_back(weight_[top]);
    marked_entries_.push_back(top);
    if (parent_[top] != kNoPos) {
      const Pos entry = parent_[top];
      const std::uint32_t up = path_id_[entry];
      const std::uint32_t b = marked_begin_[up];
      const std::uint32_t e = marked_begin_[up + 1];
      marked_weights_.push_back(marked_weights_[b]);
      marked_entries_.push_back(entry);
      for (std::uint32_t i = b + 1; i < e; ++i) {
        marked_weights_.push_back(marked_weights_[i]);
        marked_entries_.push_back(marked_entries_[i]);
      }
    }
    marked_begin_.push_back(static_cast<std::uint32_t>(marked_weights_.size()));
    stats_.max_marked_list = std::max<std::uint64_t>(stats_.max_marked_list, marked_begin_[id + 1] - marked_begin_[id]);
  }

  Builder b{*this, table, store, BitArray()};
  for (std::uint32_t id = 0; id < paths; ++id) {
    if (is_root(path_nodes(id).back()) && path_m_[id] > 0) b.own(id, AhatKind::kRootPath);
  }
  for (std::uint32_t id = 0; id < paths; ++id) {
    if (!is_root(path_nodes(id).back())) b.preprocess(id, options.share_ahat);
  }
  ahat_ = RankIndex(std::move(b.bits));

  // Block starts for the encoded prefix of every path.
  block_begin_.reserve(paths + 1);
  for (std::uint32_t id = 0; id < paths; ++id) {
    block_begin_.push_back(static_cast<std::uint32_t>(block_starts_.size()));
    const std::uint32_t e = path_encoded_[id];
    if (e == 0) continue;
    const auto w = path_weights(id);
    Weight prev = -1;
    for (std::uint32_t j = 0; j < e; ++j) {
      const Weight blk = (w[j] - w[0]) / kGranularity;
      if (blk != prev) block_starts_.push_back(j);
      prev = blk;
    }
    block_starts_.push_back(e);
  }
  block_begin_.push_back(static_cast<std::uint32_t>(block_starts_.size()));

  for (const auto& [root, count] : slots_per_tree()) {
    stats_.max_slots_per_tree = std::max<std::uint64_t>(stats_.max_slots_per_tree, count);
  }
}

std::vector<bool> ITreeForest::array_bits(std::uint32_t id) const {
  const std::uint64_t len = static_cast<std::uint64_t>(ahat_span_[id] / kGranularity) + 1;
  std::vector<bool> out(len);
  for (std::uint64_t i = 0; i < len; ++i) out[i] = ahat_.bits().get(ahat_offset_[id] + i);
  return out;
}

std::vector<std::pair<Pos, std::uint32_t>> ITreeForest::slots_per_tree() const {
  std::map<Pos, std::uint32_t> count;
  for (Pos p = 0; p < size(); ++p) {
    if (slot_[p] >= 0) count[base_[p]]++;
  }
  return {count.begin(), count.end()};
}

std::uint64_t ITreeForest::memory_words() const {
  auto w32 = [](const auto& v) { return (v.size() * sizeof(v[0]) + 7) / 8; };
  return w32(base_) + w32(weight_) + w32(parent_) + w32(ordinal_) + w32(size_) + w32(child_begin_) +
         w32(children_) + w32(path_id_) + w32(slot_) + w32(path_begin_) + w32(path_nodes_) + w32(path_weights_) +
         w32(path_m_) + w32(path_encoded_) + w32(path_ahat_) + w32(path_owns_) + w32(path_case_) +
         w32(block_begin_) + w32(block_starts_) + w32(marked_begin_) + w32(marked_weights_) + w32(marked_entries_) +
         w32(ahat_offset_) + w32(ahat_origin_) + w32(ahat_span_) + w32(ahat_kind_) + ahat_.memory_words();
}

void ITreeForest::save(Writer& w) const {
  w.vec(base_);
  w.vec(weight_);
  w.vec(parent_);
  w.vec(ordinal_);
  w.vec(size_);
  w.vec(child_begin_);
  w.vec(children_);
  w.vec(path_id_);
  w.vec(slot_);
  w.vec(path_begin_);
  w.vec(path_nodes_);
  w.vec(path_weights_);
  w.vec(path_m_);
  w.vec(path_encoded_);
  w.vec(path_ahat_);
  w.vec(path_owns_);
  w.vec(path_case_);
  w.vec(block_begin_);
  w.vec(block_starts_);
  w.vec(marked_begin_);
  w.vec(marked_weights_);
  w.vec(marked_entries_);
  w.vec(ahat_offset_);
  w.vec(ahat_origin_);
  w.vec(ahat_span_);
  w.vec(ahat_kind_);
  ahat_.save(w);
  w.raw(&stats_, sizeof(stats_));
}

ITreeForest ITreeForest::load(Reader& r) {
  ITreeForest f;
  f.base_ = r.vec<Pos>();
  f.weight_ = r.vec<Weight>();
  f.parent_ = r.vec<Pos>();
  f.ordinal_ = r.vec<std::uint32_t>();
  f.size_ = r.vec<std::uint32_t>();
  f.child_begin_ = r.vec<std::uint32_t>();
  f.children_ = r.vec<Pos>();
  f.path_id_ = r.vec<std::uint32_t>();
  f.slot_ = r.vec<std::int32_t>();
  f.path_begin_ = r.vec<std::uint32_t>();
  f.path_nodes_ = r.vec<Pos>();
  f.path_weights_ = r.vec<Weight>();
  f.path_m_ = r.vec<std::uint32_t>();
  f.path_encoded_ = r.vec<std::uint32_t>();
  f.path_ahat_ = r.vec<std::int32_t>();
  f.path_owns_ = r.vec<std::uint8_t>();
  f.path_case_ = r.vec<std::uint8_t>();
  f.block_begin_ = r.vec<std::uint32_t>();
  f.block_starts_ = r.vec<std::uint32_t>();
  f.marked_begin_ = r.vec<std::uint32_t>();
  f.marked_weights_ = r.vec<Weight>();
  f.marked_entries_ = r.vec<Pos>();
  f.ahat_offset_ = r.vec<std::uint64_t>();
  f.ahat_origin_ = r.vec<Weight>();
  f.ahat_span_ = r.vec<Weight>();
  f.ahat_kind_ = r.vec<std::uint8_t>();
  f.ahat_ = RankIndex::load(r);
  for (std::uint32_t i = 0; i < sizeof(f.stats_) / 8; ++i) reinterpret_cast<std::uint64_t*>(&f.stats_)[i] = r.u64();
  const std::size_t paths = f.path_begin_.size() - 1;
  if (f.base_.size() != f.weight_.size() || f.path_m_.size() != paths || f.marked_begin_.size() != paths + 1 ||
      f.block_begin_.size() != paths + 1 || f.path_ahat_.size() != paths) {
    throw FormatError("inconsistent forest section");
  }
  return f;
}

}  // namespace locus
