#include <cmath>

#include "checks.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "locus/itree.hpp"
#include "locus/locus_index.hpp"
#include "locus/oracle.hpp"

using namespace locus;

namespace {

// Path node with minimum weight >= w, by scanning.
Pos scan_predecessor(const ITreeForest& f, std::uint32_t path, Weight w) {
  const auto nodes = f.path_nodes(path);
  for (Pos v : nodes) {
    if (f.weight(v) >= w) return v;
  }
  return kNoPos;
}

}  // namespace

TEST_CASE("mississippi forest") {
  const auto idx = LocusIndex::build("mississippi");
  const auto& f = idx.forest(Direction::kLeft);
  const oracle::NaiveModel m("mississippi");
  for (Pos p : {2u, 3u, 4u}) CHECK(f.base(p) == 1);
  CHECK(f.subtree_size(1) == 4);
  CHECK(f.weight(1) == kInfiniteWeight);
  CHECK(f.weight(2) == 4);  // 2 - 1 + c_2
  for (Pos p = 0; p < 12; ++p) {
    CHECK(f.weight(p) == m.itree_weight(p, Direction::kLeft));
    CHECK(f.parent(p) == m.itree_parent(p, Direction::kLeft));
  }
}

TEST_CASE("all-irreducible text gives singleton trees") {
  const auto idx = LocusIndex::build("abcdefgh");
  for (Direction d : kBothDirections) {
    const auto& f = idx.forest(d);
    for (Pos p = 0; p < idx.size(); ++p) {
      CHECK(f.is_root(p));
      CHECK(f.subtree_size(p) == 1);
    }
  }
}

TEST_CASE("forest structure matches the oracle") {
  for (const auto& [name, s] : fixtures::corpus(500)) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    const oracle::NaiveModel m(s);
    const Pos n = idx.size();
    const double log_n = std::log2(static_cast<double>(n));
    for (Direction d : kBothDirections) {
      CAPTURE(to_string(d));
      const auto& f = idx.forest(d);
      for (Pos p = 0; p < n; ++p) {
        REQUIRE(f.base(p) == m.itree_base(p, d));
        REQUIRE(f.weight(p) == m.itree_weight(p, d));
        REQUIRE(f.parent(p) == m.itree_parent(p, d));
        std::uint32_t ordinal = 0;
        for (Pos c : f.children(p)) {
          REQUIRE(f.parent(c) == p);
          REQUIRE(f.child_ordinal(c) == ++ordinal);
          // Weights strictly increase toward the root.
          REQUIRE(f.weight(c) < f.weight(p));
          const bool heavy = 2 * f.subtree_size(c) > f.subtree_size(p);
          REQUIRE(heavy == (f.path_of(c) == f.path_of(p)));
        }
        std::uint32_t light = 0;
        for (Pos v = p; !f.is_root(v); v = f.parent(v)) light += f.path_of(v) != f.path_of(f.parent(v));
        REQUIRE(light <= log_n);
      }
    }
  }
}

TEST_CASE("marked ancestors match a walk up the tree") {
  for (const auto& [name, s] : fixtures::corpus(500)) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    for (Direction d : kBothDirections) {
      const auto& f = idx.forest(d);
      for (Pos p = 0; p < idx.size(); ++p) {
        std::vector<Weight> tops;
        std::vector<Pos> entries{p};
        for (Pos v = p;;) {
          const Pos top = f.path_nodes(f.path_of(v)).back();
          tops.push_back(f.weight(top));
          if (f.is_root(top)) break;
          v = f.parent(top);
          entries.push_back(v);
        }
        const auto mw = f.marked_weights(f.path_of(p));
        const auto me = f.marked_entries(f.path_of(p));
        REQUIRE(std::vector<Weight>(mw.begin(), mw.end()) == tops);
        for (std::size_t i = 1; i < entries.size(); ++i) REQUIRE(me[i] == entries[i]);
        REQUIRE(tops.back() == kInfiniteWeight);
      }
    }
  }
}

TEST_CASE("path predecessor matches a scan on every path") {
  for (const auto& [name, s] : fixtures::corpus(500)) {
    CAPTURE(name);
    for (bool share : {true, false}) {
      const auto idx = LocusIndex::build(s, {share});
      for (Direction d : kBothDirections) {
        const auto& f = idx.forest(d);
        const auto& store = idx.store(d);
        for (std::uint32_t path = 0; path < f.path_count(); ++path) {
          const auto nodes = f.path_nodes(path);
          const Weight ell = static_cast<Weight>(store.length(f.base(nodes[0])));
          const Weight hi = std::min(ell, f.weight(nodes.back()));
          CHECK(f.path_predecessor(path, f.weight(nodes[0])) == nodes[0]);
          for (Weight w = 1; w <= hi; ++w) REQUIRE(f.path_predecessor(path, w) == scan_predecessor(f, path, w));
        }
      }
    }
  }
}

TEST_CASE("the last two weights are answered without the sampled array") {
  std::uint64_t checked = 0;
  for (const auto& [name, s] : fixtures::corpus(500)) {
    const auto idx = LocusIndex::build(s);
    for (Direction d : kBothDirections) {
      const auto& f = idx.forest(d);
      for (std::uint32_t path = 0; path < f.path_count(); ++path) {
        const std::uint32_t m = f.path_m(path);
        if (f.path_owns_ahat(path) || f.path_encoded(path) == 0) continue;
        REQUIRE(f.path_encoded(path) == m - 2);
        const auto w = f.path_weights(path);
        for (Weight x = w[m - 3] + 1; x <= w[m - 1]; ++x) {
          CountingProbe probe;
          REQUIRE(f.path_predecessor(path, x, probe) == scan_predecessor(f, path, x));
          REQUIRE(!probe.ahat_used);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("weighted ancestor matches the linear scan") {
  for (const auto& [name, s] : fixtures::corpus(1000)) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    const oracle::NaiveModel m(s);
    const Pos n = idx.size();
    for (Direction d : kBothDirections) {
      const auto& f = idx.forest(d);
      for (Pos p = 0; p < n; ++p) {
        if (f.is_root(p)) continue;
        const Pos base = f.base(p);
        const Weight lo = static_cast<Weight>(p - base + 1);
        const Weight hi = static_cast<Weight>(m.ell(base, d));
        const Weight step = n > 500 ? std::max<Weight>(1, (hi - lo) / 16) : 1;
        for (Weight w = lo; w <= hi; w += step) REQUIRE(f.weighted_ancestor(p, w) == m.weighted_ancestor(p, w, d));
        if (f.weight(p) <= hi) CHECK(f.weighted_ancestor(p, f.weight(p)) == p);
      }
    }
  }
}

TEST_CASE("weights above every non-root weight reach the root") {
  const std::string s = fixtures::mutate(fixtures::fibonacci(499), 0.02, 7, "ab");
  const auto idx = LocusIndex::build(s);
  for (Direction d : kBothDirections) {
    const auto& f = idx.forest(d);
    for (Pos p = 0; p < idx.size(); ++p) {
      if (f.is_root(p)) continue;
      Weight top = 0;
      for (Pos v = p; !f.is_root(v); v = f.parent(v)) top = std::max(top, f.weight(v));
      if (top + 1 <= static_cast<Weight>(idx.store(d).length(f.base(p)))) CHECK(f.weighted_ancestor(p, top + 1) == f.base(p));
    }
  }
}

TEST_CASE("subtrees are shifted copies of the neighbour's tree") {
  for (const auto& [name, s] : fixtures::corpus(500)) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    const oracle::NaiveModel m(s);
    for (Direction d : kBothDirections) {
      std::string first;
      CHECK_MESSAGE(checks::subtree_isomorphism(m, idx.forest(d), d, &first) == 0, first);
      CHECK(checks::slot_bound(idx.forest(d), idx.size()) == 0);
    }
  }
}

TEST_CASE("sharing is exercised and never falls back on the fixtures") {
  std::uint64_t shared = 0;
  std::uint64_t kinds[4] = {0, 0, 0, 0};
  for (const auto& [name, s] : fixtures::corpus(500)) {
    const auto idx = LocusIndex::build(s);
    for (Direction d : kBothDirections) {
      const auto& st = idx.forest(d).stats();
      shared += st.shared_paths;
      kinds[1] += st.case_heavy;
      kinds[2] += st.case_light;
      kinds[3] += st.case_small;
      CHECK(st.fallback_arrays == 0);
      CHECK(st.case3_precondition_failures == 0);
    }
  }
  CHECK(shared > 0);
  CHECK(kinds[1] > 0);
  CHECK(kinds[2] > 0);
  CHECK(kinds[3] > 0);
}
