#pragma once

// Property checks shared by the unit and acceptance suites. Each returns the
// number of violations and records the first one in `first` when non-null.

#include <algorithm>
#include <cmath>
#include <string>

#include "locus/itree.hpp"
#include "locus/oracle.hpp"

namespace checks {

using namespace locus;

/// For non-irreducible p: ell_{p-1} = ell_p + 1 and b_{p-1}[x+1] = 1 implies b_p[x] = 1.
inline std::uint64_t inherited_bits(const oracle::NaiveModel& m, Direction d, std::string* first = nullptr) {
  std::uint64_t bad = 0;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0 && first) *first = what;
  };
  for (Pos p = 1; p < m.size(); ++p) {
    if (m.irreducible(p, d)) continue;
    if (m.ell(p - 1, d) != m.ell(p, d) + 1) fail("ell step at p=" + std::to_string(p));
    const auto prev = m.bp(p - 1, d);
    const auto cur = m.bp(p, d);
    for (std::size_t x = 0; x + 1 < prev.size(); ++x) {
      if (prev[x + 1] && !(x < cur.size() && cur[x])) fail("bit " + std::to_string(x) + " at p=" + std::to_string(p));
    }
  }
  return bad;
}

/// For non-irreducible p: a bit of b_p that b_{p-1} does not carry lies at depth <= c_p.
inline std::uint64_t new_bits_below_overlap(const oracle::NaiveModel& m, Direction d, std::string* first = nullptr) {
  std::uint64_t bad = 0;
  for (Pos p = 1; p < m.size(); ++p) {
    if (m.irreducible(p, d)) continue;
    const auto prev = m.bp(p - 1, d);
    const auto cur = m.bp(p, d);
    for (std::size_t x = 0; x < cur.size(); ++x) {
      const bool inherited = x + 1 < prev.size() && prev[x + 1];
      if (cur[x] && !inherited && x > m.overlap(p, d)) {
        if (bad++ == 0 && first) *first = "p=" + std::to_string(p) + " depth=" + std::to_string(x);
      }
    }
  }
  return bad;
}

/// The subtree of every non-root I-tree node x at position p equals I_r (r the
/// neighbour of p) with root children of weight >= c_p cut and weights shifted
/// by p - base. Also checks that heaviness of edges below x's children
/// matches the image edges in I_r.
inline std::uint64_t subtree_isomorphism(const oracle::NaiveModel& m, const ITreeForest& f, Direction d,
                                         std::string* first = nullptr) {
  std::uint64_t bad = 0;
  auto fail = [&](Pos p, const std::string& what) {
    if (bad++ == 0 && first) *first = "x=" + std::to_string(p) + ": " + what;
  };
  const Pos n = m.size();
  for (Pos p = 0; p < n; ++p) {
    if (m.irreducible(p, d)) continue;
    const Pos base = m.itree_base(p, d);
    const Pos r = m.neighbour(p, d);
    const Pos c = m.overlap(p, d);
    const Weight shift = static_cast<Weight>(p - base);
    // Subtree of p: the contiguous positions after p whose ancestor chain reaches p.
    Pos i = 0;
    while (p + i + 1 < n && !m.irreducible(p + i + 1, d)) {
      Pos a = p + i + 1;
      while (a > p && a != kNoPos) a = m.itree_parent(a, d);
      if (a != p) break;
      ++i;
    }
    if (i + 1 != f.subtree_size(p)) fail(p, "subtree not contiguous");
    // With c_p = 0 the image is the bare root and x must be a leaf.
    if (i >= std::max<Pos>(c, 1)) fail(p, "subtree reaches c_p");
    bool ok = true;
    for (Pos j = 1; j <= i && ok; ++j) {
      if (r + j >= n || m.irreducible(r + j, d)) {
        fail(p, "image run too short at j=" + std::to_string(j));
        ok = false;
        break;
      }
      const Pos px = m.itree_parent(p + j, d) - p;
      const Pos py = m.itree_parent(r + j, d) - r;
      if (px != py) fail(p, "parent differs at j=" + std::to_string(j));
      if (m.itree_weight(p + j, d) != m.itree_weight(r + j, d) + shift) fail(p, "weight differs at j=" + std::to_string(j));
      if (px != 0 && f.subtree_size(p + j) != f.subtree_size(r + j)) fail(p, "subtree size differs at j=" + std::to_string(j));
      if (px != 0) {
        const bool heavy_x = f.path_of(p + j) == f.path_of(m.itree_parent(p + j, d));
        const bool heavy_y = f.path_of(r + j) == f.path_of(m.itree_parent(r + j, d));
        if (heavy_x != heavy_y) fail(p, "heaviness differs at j=" + std::to_string(j));
      }
    }
    if (!ok) continue;
    const Pos next = r + i + 1;
    const bool closed = next >= n || m.irreducible(next, d) ||
                        (m.itree_parent(next, d) == r && m.itree_weight(next, d) >= static_cast<Weight>(c));
    if (!closed) fail(p, "image keeps extra nodes");
  }
  return bad;
}

/// Distinct reuse slots per tree root never exceed log2 n.
inline std::uint64_t slot_bound(const ITreeForest& f, Pos n, std::uint64_t* worst = nullptr) {
  const double bound = std::log2(static_cast<double>(n));
  std::uint64_t bad = 0;
  for (const auto& [root, count] : f.slots_per_tree()) {
    if (worst) *worst = std::max<std::uint64_t>(*worst, count);
    if (static_cast<double>(count) > bound) ++bad;
  }
  return bad;
}

}  // namespace checks
