#include "doctest.h"
#include "fixtures.hpp"
#include "locus/locus_index.hpp"
#include "locus/oracle.hpp"

using namespace locus;

namespace {

std::string label_of(const LocusIndex& idx, NodeId v) {
  const Label l = idx.label(v);
  return std::string(idx.text().view().substr(l.start, l.length));
}

}  // namespace

TEST_CASE("mississippi loci") {
  const auto idx = LocusIndex::build("mississippi");
  CHECK(idx.size() == 12);
  CHECK(idx.tree().leaf_count() == 12);
  const NodeId v = idx.locus(1, 3);
  CHECK(idx.string_depth(v) == 4);
  CHECK(label_of(idx, v) == "issi");
  // "m" occurs once, so its locus is the leaf hanging off the root.
  CHECK(idx.locus(0, 0) == idx.leaf_of(0));
  CHECK(idx.tree().parent(idx.locus(0, 0)) == idx.tree().root());
  CHECK(label_of(idx, idx.locus(0, 0)).substr(0, 1) == "m");
  CHECK(label_of(idx, idx.locus(1, 1)) == "i");
  CHECK(idx.tree().parent(idx.locus(1, 1)) == idx.tree().root());
  for (Pos p = 0; p < idx.size(); ++p) CHECK(idx.locus(p, idx.size() - 1) == idx.leaf_of(p));
}

TEST_CASE("mississippi branching counts") {
  const auto idx = LocusIndex::build("mississippi");
  CHECK(idx.count_branching_at_least(1, 1, Direction::kLeft) == 2);
  // Non-irreducible p = 2: the neighbour's b array stops short of depth ell_5 = 1.
  CHECK(idx.count_branching_at_least(2, 1, Direction::kLeft) == 2);
  for (Pos p = 0; p < idx.size(); ++p) {
    const Pos ell = idx.arrays().plcp_pred[p];
    if (ell + 1 <= idx.size() - p) CHECK(idx.count_branching_at_least(p, ell + 1, Direction::kLeft) == 0);
  }
}

TEST_CASE("single symbol text") {
  const auto idx = LocusIndex::build("a");
  CHECK(idx.size() == 2);
  CHECK(idx.locus(0, 0) == idx.leaf_of(0));
  CHECK(idx.locus(0, 1) == idx.leaf_of(0));
  CHECK(idx.locus(1, 1) == idx.leaf_of(1));
}

TEST_CASE("invalid queries are rejected") {
  const auto idx = LocusIndex::build("banana");
  CHECK_THROWS_AS(idx.locus(3, 2), std::out_of_range);
  CHECK_THROWS_AS(idx.locus(0, 7), std::out_of_range);
  CHECK_THROWS_AS(idx.count_branching_at_least(0, 0, Direction::kLeft), std::out_of_range);
  CHECK_THROWS_AS(idx.count_branching_at_least(5, 3, Direction::kLeft), std::out_of_range);
  CHECK_THROWS_AS(LocusIndex::build(""), InputError);
}

TEST_CASE("branching counts match the oracle exhaustively") {
  for (const auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    const oracle::NaiveModel m(s);
    for (Direction d : kBothDirections) {
      for (Pos p = 0; p < idx.size(); ++p) {
        for (Pos ell = 1; ell <= idx.size() - p; ++ell) {
          CAPTURE(p);
          CAPTURE(ell);
          REQUIRE(idx.count_branching_at_least(p, ell, d) == m.count_at_least(p, ell, d));
        }
      }
    }
  }
}

TEST_CASE("loci match the root descent exhaustively") {
  for (const auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    const auto idx = LocusIndex::build(s);
    const oracle::NaiveModel m(s);
    const auto text = idx.text().bytes();
    const auto& sa = idx.arrays().sa;
    for (Pos p = 0; p < idx.size(); ++p) {
      for (Pos q = p; q < idx.size(); ++q) {
        const NodeId v = idx.locus(p, q);
        REQUIRE(v == oracle::descend(idx.tree(), text, sa, p, q));
        const oracle::NodeSig sig{idx.string_depth(v), idx.tree().lo(v), idx.tree().hi(v)};
        REQUIRE(sig == m.locus(p, q));
      }
    }
  }
}

TEST_CASE("operation counts stay bounded") {
  std::uint64_t worst = 0;
  for (const auto& [name, s] : fixtures::corpus()) {
    const auto idx = LocusIndex::build(s);
    for (Pos p = 0; p < idx.size(); ++p) {
      for (Pos q = p; q < idx.size(); ++q) {
        CountingProbe probe;
        idx.locus_counted(p, q, probe);
        worst = std::max(worst, probe.total);
      }
    }
  }
  CHECK(worst <= 64);
}
