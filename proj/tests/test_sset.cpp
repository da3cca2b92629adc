#include <set>

#include "doctest.h"
#include "nervekit/sset.hpp"

using namespace nervekit;

namespace {

// All monotone sequences of length len in [0, n], generated by brute force.
std::vector<Sequence> all_monotone(int len, int n) {
  std::vector<Sequence> out;
  Sequence s(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == len) {
      out.push_back(s);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      s[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("monotone rank and unrank are inverse and lexicographic") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto all = all_monotone(m + 1, n);
      REQUIRE(all.size() == monotone_count(m, n));
      for (std::size_t r = 0; r < all.size(); ++r) {
        CHECK(monotone_rank(all[r], n) == r);
        CHECK(monotone_unrank(r, m, n) == all[r]);
      }
    }
}

TEST_CASE("standard simplex level sizes") {
  CHECK(standard_simplex(1, 3).sizes() == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(standard_simplex(0, 2).sizes() == std::vector<std::size_t>{1, 1, 1});
  CHECK(standard_simplex(2, 1).sizes() == std::vector<std::size_t>{3, 6});
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) CHECK(standard_simplex(n, 4).size(k) == binomial(n + k + 1, k + 1));
  CHECK(validate_sset(standard_simplex(2, 3)).ok());
  CHECK(validate_sset(standard_simplex(3, 5)).ok());
}

TEST_CASE("apply and vertices on the standard simplex") {
  const SSet d3 = standard_simplex(3, 4);
  for (int k = 0; k <= 3; ++k) {
    auto cells = all_monotone(k + 1, 3);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v = 0; v <= k; ++v) CHECK(d3.vertex(k, static_cast<CellId>(c), v) == static_cast<CellId>(cells[c][v]));
      // seq^*(c) is the composite c o seq.
      for (int m = 0; m <= 3; ++m)
        for (const auto& seq : all_monotone(m + 1, k)) {
          Sequence comp;
          for (int t : seq) comp.push_back(cells[c][t]);
          CHECK(d3.apply(k, static_cast<CellId>(c), seq) == monotone_rank(comp, 3));
        }
    }
  }
}

TEST_CASE("product of simplices: sizes and nondegenerate counts") {
  const SSet d1 = standard_simplex(1, 3);
  const SSet sq = product(d1, d1);
  CHECK(sq.size(1) == 9);
  CHECK(validate_sset(sq).ok());
  // Oracle: a pair of sequences is degenerate iff both repeat at the same position.
  std::vector<std::size_t> oracle;
  for (int k = 0; k <= 3; ++k) {
    std::size_t count = 0;
    for (const auto& s : all_monotone(k + 1, 1))
      for (const auto& u : all_monotone(k + 1, 1)) {
        bool degenerate = false;
        for (int t = 1; t <= k; ++t) degenerate = degenerate || (s[t] == s[t - 1] && u[t] == u[t - 1]);
        count += degenerate ? 0 : 1;
      }
    oracle.push_back(count);
  }
  CHECK(sq.nondegenerate_counts() == oracle);
  CHECK(oracle == std::vector<std::size_t>{4, 5, 2, 0});

  const SSet x = standard_simplex(2, 3);
  CHECK(product(point(3), x) == x);
  CHECK(validate_map(sq, d1, projection_first(d1, d1)).ok());
  CHECK(validate_map(sq, d1, projection_second(d1, d1)).ok());
  const SSet p3 = power(d1, 3);
  for (int k = 0; k <= 3; ++k) CHECK(p3.size(k) == d1.size(k) * d1.size(k) * d1.size(k));
  CHECK(validate_sset(p3).ok());
}

TEST_CASE("poset nerves") {
  const SSet chain2 = poset_nerve(FinitePoset::chain(2), 3).space;
  CHECK(chain2 == standard_simplex(1, 3));

  // P_{0,3}: {0,3} < {0,1,3}, {0,2,3} < {0,1,2,3}
  const FinitePoset p03 = FinitePoset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(validate_poset(p03).ok());
  const SSet n03 = poset_nerve(p03, 3).space;
  CHECK(validate_sset(n03).ok());
  CHECK(n03.nondegenerate_counts() == std::vector<std::size_t>{4, 5, 2, 0});
  CHECK(n03.sizes() == product(standard_simplex(1, 3), standard_simplex(1, 3)).sizes());

  const SSet anti = poset_nerve(FinitePoset::antichain(3), 3).space;
  CHECK(anti.sizes() == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(anti.nondegenerate_counts() == std::vector<std::size_t>{3, 0, 0, 0});

  FinitePoset bad = FinitePoset::antichain(2);
  bad.leq[1] = bad.leq[2] = 1;
  CHECK(validate_poset(bad).size() == 1);
}

TEST_CASE("boundary and horn subcomplexes") {
  const SSet b2 = boundary_simplex(2, 2);
  CHECK(b2.nondegenerate_counts() == std::vector<std::size_t>{3, 3, 0});
  const SSet h = horn(2, 0, 2);
  CHECK(h.nondegenerate_counts() == std::vector<std::size_t>{3, 2, 0});
  CHECK(validate_sset(h).ok());
  const SSet two_points = boundary_simplex(1, 1);
  CHECK(two_points.nondegenerate_counts() == std::vector<std::size_t>{2, 0});
}

TEST_CASE("enumerate_maps") {
  const SSet d1 = standard_simplex(1, 1);
  CHECK(enumerate_maps(d1, d1).size() == 3);
  CHECK(enumerate_maps(boundary_simplex(1, 1), d1).size() == 4);

  // Yoneda: maps from Delta^k correspond to k-cells, in index order.
  const SSet sq = product(standard_simplex(1, 3), standard_simplex(1, 3));
  for (int k = 0; k <= 3; ++k) {
    auto maps = enumerate_maps(standard_simplex(k, k), truncate(sq, k));
    REQUIRE(maps.size() == sq.size(k));
    Sequence id(static_cast<std::size_t>(k) + 1);
    for (int t = 0; t <= k; ++t) id[t] = t;
    const CellId top = static_cast<CellId>(monotone_rank(id, k));
    std::set<CellId> tops;
    for (const auto& m : maps) tops.insert(m.levels[k][top]);
    CHECK(tops.size() == sq.size(k));
    for (const auto& m : maps) CHECK(validate_map(standard_simplex(k, k), truncate(sq, k), m).ok());
  }

  // Empty source has exactly one map; empty target none.
  CHECK(enumerate_maps(SSet(2), sq).size() == 1);
  CHECK(enumerate_maps(d1, SSet(1)).empty());

  // Parallel split preserves the order.
  const SSet d2 = standard_simplex(2, 2);
  const SSet tgt = truncate(sq, 2);
  MapSearchOptions par;
  par.jobs = 4;
  CHECK(enumerate_maps(d2, tgt) == enumerate_maps(d2, tgt, par));
}

TEST_CASE("planted defect: exactly one violation") {
  const SSet d2 = standard_simplex(2, 2);
  OperatorTables faces = d2.face_tables();
  const Sequence top{0, 1, 2};
  const CellId c = static_cast<CellId>(monotone_rank(top, 2));
  faces[2][1][c] = static_cast<CellId>(monotone_rank(Sequence{0, 0}, 2));
  const SSet broken(d2.sizes(), faces, d2.degen_tables());
  const auto r = validate_sset(broken);
  REQUIRE(r.size() == 1);
  CHECK(r.violations[0].witness == "(2, " + std::to_string(c) + ")");
  CHECK(r.violations[0].rule == "d_0 d_1 = d_0 d_0");
}

TEST_CASE("Eilenberg-Zilber decomposition") {
  const SSet d2 = standard_simplex(2, 4);
  for (int n = 0; n <= 4; ++n)
    for (CellId c = 0; c < d2.size(n); ++c) {
      const auto ez = ez_decompose(d2, n, c);
      CHECK(!d2.degenerate(ez.base_level, ez.base));
      CHECK(d2.apply(ez.base_level, ez.base, ez.seq) == c);
    }
}
