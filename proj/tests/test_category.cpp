#include "doctest.h"
#include "nervekit/category.hpp"
#include "nervekit/examples.hpp"

using namespace nervekit;

namespace {

std::vector<std::size_t> sizes_of(const SSet& x) { return x.sizes(); }

// All monotone maps [m] -> [n].
std::vector<Sequence> monotone_maps(int m, int n) {
  std::vector<Sequence> out;
  for (std::uint64_t r = 0; r < monotone_count(m, n); ++r) out.push_back(monotone_unrank(r, m, n));
  return out;
}

}  // namespace

TEST_CASE("nerves of finite categories") {
  const FiniteCategory arrow = poset_category(FinitePoset::chain(2));
  CHECK(validate_category(arrow).ok());
  CHECK(sizes_of(nerve_cat(arrow, 3).space) == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(nerve_cat(poset_category(FinitePoset::chain(3)), 3).space == standard_simplex(2, 3));
  CHECK(sizes_of(nerve_cat(poset_category(FinitePoset::chain(1)), 2).space) == std::vector<std::size_t>{1, 1, 1});

  const SimplicialCategory bz2 = build_example("bg:z2", 3).rel.cat;
  const SSet nz2 = bz2.hom(0, 0);
  CHECK(sizes_of(nz2) == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(validate_sset(nz2).ok());
}

TEST_CASE("level categories") {
  const SimplicialCategory bz2 = build_example("bg:z2", 2).rel.cat;
  const FiniteCategory c0 = level_category(bz2, 0);
  CHECK(c0.objects == 1);
  CHECK(c0.hom_size(0, 0) == 1);
  const FiniteCategory c1 = level_category(bz2, 1);
  CHECK(c1.hom_size(0, 0) == 2);
  CHECK(validate_category(c1).ok());
  const CellId e = c1.id[0], g = 1 - e;
  CHECK(c1.compose(0, 0, 0, g, g) == e);

  const FiniteCategory arrow = poset_category(FinitePoset::chain(3));
  const SimplicialCategory disc = discrete_simplicial(arrow, 3);
  for (int n = 0; n <= 3; ++n) {
    const FiniteCategory cn = level_category(disc, n);
    CHECK(cn.hom_sizes == arrow.hom_sizes);
    CHECK(cn.comp == arrow.comp);
    CHECK(cn.id == arrow.id);
  }
}

TEST_CASE("generators produce valid relative categories") {
  for (const auto& name : example_names()) {
    INFO(name);
    const Example ex = build_example(name, 2);
    CHECK(validate_relative(ex.rel).ok());
  }
  CHECK_THROWS_AS(build_example("bg:nope", 2), std::invalid_argument);
  CHECK_THROWS_AS(build_example("mystery", 2), std::invalid_argument);
  const auto iso = build_example("discrete:z2/isos", 2);
  CHECK(iso.rel.in_sub(0, 0, 0, 1));
}

TEST_CASE("relative structure: wideness") {
  const auto bad = build_example("bg:z2/ids", 2);
  const auto r = validate_relative(bad.rel);
  REQUIRE(r.size() == 1);
  CHECK(r.violations[0].rule == "wideness");
  CHECK(validate_relative(build_example("discrete:poset012/ids", 2).rel).ok());
  CHECK(validate_relative(build_example("bg:z2/whole", 2).rel).ok());
}

TEST_CASE("interval power categories") {
  const SSet d1 = standard_simplex(1, 3);
  const SimplicialCategory c1 = interval_power_cat(1, d1);
  CHECK(c1.hom(0, 1) == d1);
  const SimplicialCategory c2 = interval_power_cat(2, d1);
  CHECK(c2.hom(0, 2).size(1) == 9);
  for (ObjId i = 0; i < 3; ++i) CHECK(c2.hom(i, i) == point(3));
  CHECK(c2.hom(2, 0).total_cells() == 0);
  CHECK(validate_simplicial_category(c2).ok());
  CHECK(validate_simplicial_category(bfrak(2, 2)).ok());
}

TEST_CASE("bfrak tuples round trip") {
  for (int k = 0; k <= 2; ++k)
    for (CellId c = 0; c < 36; ++c) {
      const auto t = bfrak_tuple(2, 0, 2, k, c);
      if (c < monotone_count(k, 2) * monotone_count(k, 2)) CHECK(bfrak_cell(2, k, t) == c);
    }
}

TEST_CASE("C[Delta^n]") {
  CHECK(frak_c(1, 3).cat.hom(0, 1) == point(3));
  const FrakC c2 = frak_c(2, 3);
  CHECK(c2.poset(0, 2) == std::vector<std::uint32_t>{0b101, 0b111});
  CHECK(c2.cat.hom(0, 2).nondegenerate_counts() == std::vector<std::size_t>{2, 1, 0, 0});
  const FrakC c3 = frak_c(3, 3);
  CHECK(c3.cat.hom(0, 3).nondegenerate_counts() == std::vector<std::size_t>{4, 5, 2, 0});
  for (int n = 0; n <= 4; ++n) {
    const FrakC c = frak_c(n, 3);
    CHECK(validate_simplicial_category(c.cat).ok());
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        const SSet cube = power(standard_simplex(1, 3), j - i - (j > i ? 1 : 0));
        CHECK(c.cat.hom(i, j).sizes() == cube.sizes());
        CHECK(c.cat.hom(i, j).nondegenerate_counts() == cube.nondegenerate_counts());
      }
  }
}

TEST_CASE("comparison functor values") {
  CHECK(comparison_vertex(0b11, 0, 1) == std::vector<int>{0});
  CHECK(comparison_vertex(0b101, 0, 2) == std::vector<int>{0, 0});
  CHECK(comparison_vertex(0b111, 0, 2) == std::vector<int>{1, 0});

  const FrakC c2 = frak_c(2, 2);
  const SimplicialCategory b2 = bfrak(2, 2);
  const SimplicialFunctor f2 = comparison_functor(c2, b2);
  // The edge {0,2} < {0,1,2} goes to the edge ((0,1),(0,0)).
  const CellId edge = c2.cell(0, 2, {0b101, 0b111});
  const auto tuple = bfrak_tuple(2, 0, 2, 1, f2.homs[2].levels[1][edge]);
  CHECK(tuple == std::vector<Sequence>{{0, 1}, {0, 0}});
}

TEST_CASE("comparison functors are functors and natural") {
  const int dim = 2;
  std::vector<FrakC> cs;
  std::vector<SimplicialCategory> bs;
  std::vector<SimplicialFunctor> fs;
  for (int n = 0; n <= 3; ++n) {
    cs.push_back(frak_c(n, dim));
    bs.push_back(bfrak(n, dim));
    fs.push_back(comparison_functor(cs.back(), bs.back()));
    CHECK(validate_functor(cs.back().cat, bs.back(), fs.back()).ok());
  }
  // All monotone maps [m] -> [n] with m, n <= 3.
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& alpha : monotone_maps(m, n)) {
        const SimplicialFunctor ca = frak_c_map(alpha, cs[m], cs[n]);
        const SimplicialFunctor ba = bfrak_map(alpha, m, n, dim);
        CHECK(validate_functor(cs[m].cat, cs[n].cat, ca).ok());
        CHECK(validate_functor(bs[m], bs[n], ba).ok());
        CHECK(compose(fs[n], ca) == compose(ba, fs[m]));
      }
}
