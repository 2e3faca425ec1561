#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "locus/irreducible.hpp"
#include "locus/oracle.hpp"

using namespace locus;

namespace {

struct Built {
  Text text;
  SuffixArrayBundle b;
  SuffixTree t;
  explicit Built(std::string_view s) : text(Text::from_string(s)), b(build_suffix_arrays(text)), t(b) {}
  DirectionalArrays view(Direction d) const { return DirectionalArrays(b, d); }
};

}  // namespace

TEST_CASE("mississippi irreducible positions") {
  const Built m("mississippi");
  const auto flags = mark_irreducible(m.view(Direction::kLeft));
  for (Pos p = 0; p < 12; ++p) CHECK(flags.get(p) == (p < 2 || p > 4));
  CHECK(irreducible_lcp_sum(m.view(Direction::kLeft)) == 7);
  const IrreducibleStore store(m.t, m.view(Direction::kLeft));
  CHECK(store.total_bits() == 7);
  CHECK(store.irreducible_count() == 9);
}

TEST_CASE("mississippi b_1") {
  const Built m("mississippi");
  const IrreducibleStore store(m.t, m.view(Direction::kLeft));
  CHECK(store.length(1) == 4);
  CHECK(store.bits_of(1) == std::vector<bool>{true, true, false, false});
  CHECK(store.count_ones(1, 0, 3) == 2);
  CHECK(store.count_ones(1, 2, 1) == 0);
  CHECK(store.count_ones(1, 4, 40) == 0);
  CHECK(store.count_ones(1, 1, 40) == 1);
  CHECK_THROWS_AS(store.count_ones(2, 0, 3), std::logic_error);
}

TEST_CASE("mississippi neighbours") {
  const Built m("mississippi");
  const IrreducibleStore store(m.t, m.view(Direction::kLeft));
  const NeighbourTable table(m.t, m.view(Direction::kLeft), store);
  CHECK(table.neighbour(2) == 5);
  CHECK(table.overlap(2) == 3);
  CHECK(table.neighbour(1) == 1);
  CHECK(table.overlap(1) == 4);
}

TEST_CASE("unary text: only run boundaries are irreducible") {
  const std::string s(200, 'a');
  const Built m(s);
  const oracle::NaiveModel naive(s);
  const double bound = 2.0 * m.b.size() * std::log2(static_cast<double>(m.b.size()));
  for (Direction d : kBothDirections) {
    const auto flags = mark_irreducible(m.view(d));
    for (Pos p = 0; p < m.b.size(); ++p) CHECK(flags.get(p) == naive.irreducible(p, d));
    CHECK(static_cast<double>(irreducible_lcp_sum(m.view(d))) <= bound);
  }
}

TEST_CASE("stored b_p and neighbours agree with the oracle") {
  for (const auto& [name, s] : fixtures::corpus(500)) {
    CAPTURE(name);
    const Built m(s);
    const oracle::NaiveModel naive(s);
    for (Direction d : kBothDirections) {
      CAPTURE(to_string(d));
      const IrreducibleStore store(m.t, m.view(d));
      const NeighbourTable table(m.t, m.view(d), store);
      for (Pos p = 0; p < m.b.size(); ++p) {
        REQUIRE(store.is_irreducible(p) == naive.irreducible(p, d));
        if (store.is_irreducible(p)) {
          REQUIRE(store.length(p) == naive.ell(p, d));
          REQUIRE(store.bits_of(p) == naive.bp(p, d));
        }
        REQUIRE(table.neighbour(p) == naive.neighbour(p, d));
        REQUIRE(table.overlap(p) == naive.overlap(p, d));
        // Maximality over every irreducible suffix.
        for (Pos r = 0; r < m.b.size(); ++r) {
          if (!store.is_irreducible(p) && naive.irreducible(r, d)) REQUIRE(naive.lcp(r, p) <= table.overlap(p));
        }
      }
    }
  }
}

TEST_CASE("the lowest branching node sits at depth ell_p") {
  for (const auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    const Built m(s);
    const oracle::NaiveModel naive(s);
    for (Direction d : kBothDirections) {
      for (Pos p = 0; p < m.b.size(); ++p) {
        const auto list = oracle::branch_list(m.t, m.b.isa[p], d);
        if (m.view(d).has_side_neighbour(p)) {
          REQUIRE(!list.empty());
          REQUIRE(m.t.string_depth(list.front()) == naive.ell(p, d));
        } else {
          REQUIRE(list.empty());
        }
      }
    }
  }
}
