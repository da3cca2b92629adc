#include <set>

#include "doctest.h"
#include "nervekit/examples.hpp"
#include "nervekit/nerves.hpp"

using namespace nervekit;

namespace {

std::vector<Sequence> monotone_maps(int m, int n) {
  std::vector<Sequence> out;
  for (std::uint64_t r = 0; r < monotone_count(m, n); ++r) out.push_back(monotone_unrank(r, m, n));
  return out;
}

// Brute force: every simplicial functor C[Delta^n] -> C, as an HC key.
std::set<HcKey> functors_from_frak_c(const SimplicialCategory& c, int n) {
  const FrakC fc = frak_c(n, c.dim);
  const std::size_t N = n + 1, M = c.objects();
  std::set<HcKey> out;
  std::vector<ObjId> objs(N, 0);
  auto over_objects = [&](auto&& self, std::size_t t) -> void {
    if (t < N) {
      for (ObjId x = 0; x < M; ++x) {
        objs[t] = x;
        self(self, t + 1);
      }
      return;
    }
    SimplicialFunctor f;
    f.objects = objs;
    f.homs.resize(N * N);
    std::vector<std::pair<std::size_t, std::vector<SimplicialMap>>> free;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        auto& m = f.homs[a * N + b];
        for (int k = 0; k <= c.dim; ++k) m.levels.emplace_back(fc.cat.hom(a, b).size(k));
        if (a == b)
          for (int k = 0; k <= c.dim; ++k) m.levels[k][0] = c.identity(objs[a], k);
        if (a < b) free.emplace_back(a * N + b, enumerate_maps(fc.cat.hom(a, b), c.hom(objs[a], objs[b])));
      }
    auto choose = [&](auto&& self2, std::size_t i) -> void {
      if (i == free.size()) {
        if (!validate_functor(fc.cat, c, f).ok()) return;
        out.insert(hc_from_slots(n, objs, [&](const HcShape::Slot& s) {
          return f.homs[s.a * N + s.b].levels[s.level][fc.cell(s.a, s.b, s.chain)];
        }));
        return;
      }
      for (const auto& m : free[i].second) {
        f.homs[free[i].first] = m;
        self2(self2, i + 1);
      }
    };
    choose(choose, 0);
  };
  over_objects(over_objects, 0);
  return out;
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

TEST_CASE("HC shapes") {
  const HcShape& s2 = hc_shape(2);
  // Pairs (0,1), (1,2): one slot each; (0,2): {0,2} and {0,2} < {0,1,2}.
  CHECK(s2.slots.size() == 4);
  CHECK(s2.slots[2].chain == std::vector<std::uint32_t>{0b101});
  CHECK(s2.slots[3].chain == std::vector<std::uint32_t>{0b101, 0b111});
  CHECK(s2.slots[3].faces[1] == 2);
  for (int n = 0; n <= 4; ++n) {
    const HcShape& s = hc_shape(n);
    for (std::size_t t = 0; t < s.slots.size(); ++t) CHECK(s.find(s.slots[t].chain) == static_cast<int>(t));
  }
}

TEST_CASE("HC nerve agrees with brute-force functor enumeration") {
  for (const std::string name : {"bg:z2", "discrete:poset012", "hom-simplex:1", "bg:z3"}) {
    INFO(name);
    const SimplicialCategory c = build_example(name, 2).rel.cat;
    const HcNerve hc = hc_nerve(c, 3);
    CHECK(validate_sset(hc.space).ok());
    for (int n = 0; n <= 3; ++n) {
      INFO(n);
      const std::set<HcKey> oracle = functors_from_frak_c(c, n);
      const std::set<HcKey> got(hc.keys[n].begin(), hc.keys[n].end());
      CHECK(got == oracle);
      for (const auto& k : hc.keys[n]) CHECK(validate_hc_simplex(c, n, k).ok());
    }
  }
}

TEST_CASE("HC nerve of BZ/2 counts") {
  const SimplicialCategory c = build_example("bg:z2", 3).rel.cat;
  const HcNerve hc = hc_nerve(c, 4);
  for (int n = 0; n <= 4; ++n) CHECK(hc.space.size(n) == pow2(n * (n - 1) / 2));
  CHECK_THROWS_AS(hc_nerve(c, 5), TruncationError);
  const HcNerve par = hc_nerve(c, 4, 3);
  CHECK(par.space == hc.space);
  CHECK(par.keys == hc.keys);
}

TEST_CASE("hc_apply matches the operator tables") {
  const SimplicialCategory c = build_example("hom-simplex:1", 3).rel.cat;
  const HcNerve hc = hc_nerve(c, 3);
  for (int n = 0; n <= 3; ++n)
    for (CellId x = 0; x < hc.space.size(n); ++x)
      for (int m = 0; m <= 3; ++m)
        for (const auto& seq : monotone_maps(m, n))
          CHECK(hc.find(m, hc_apply(c, n, hc.keys[n][x], seq)) == hc.space.apply(n, x, seq));
}

TEST_CASE("binerve and classifying space of BZ/2") {
  const RelativeSimplicialCategory r = build_example("bg:z2", 3).rel;
  const Binerve b = binerve_marked(r, 3, 3);
  CHECK(validate_bisset(b.marked.space).ok());
  CHECK(validate_marked_bisset(b.marked).ok());
  // A (p,q)-cell is a p-tuple of q-simplices of NZ/2, which has 2^q of them.
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(b.marked.space.size(p, q) == pow2(p * q));
  const SSet bz = classifying_space(r.cat, 3);
  CHECK(validate_sset(bz).ok());
  for (int k = 0; k <= 3; ++k) CHECK(bz.size(k) == pow2(k * k));
  CHECK_THROWS_AS(binerve_marked(r, 2, 4), TruncationError);

  const MarkedSSet dp = diag_plus(b.marked);
  CHECK(dp.marked.size() == 2);
  CHECK(std::count(dp.marked.begin(), dp.marked.end(), 1) == 2);
}

TEST_CASE("identities-only marking on a poset binerve") {
  const RelativeSimplicialCategory r = build_example("discrete:poset01", 2).rel;
  const Binerve b = binerve_marked(r, 2, 2);
  CHECK(validate_marked_bisset(b.marked).ok());
  for (int q = 0; q <= 2; ++q) {
    // Arrows of [1]: two identities and 0 < 1.
    CHECK(b.marked.marked[q].size() == 3);
    CHECK(std::count(b.marked.marked[q].begin(), b.marked.marked[q].end(), 1) == 2);
  }
}

TEST_CASE("comparison map B(C) -> N_hc(C)") {
  for (const std::string name : {"bg:z2", "discrete:poset012", "hom-simplex:1", "bfrak:1"}) {
    INFO(name);
    const SimplicialCategory c = build_example(name, 3).rel.cat;
    const Comparison cmp = comparison_map(c, 3);
    CHECK(validate_map(cmp.b, cmp.hc.space, cmp.map).ok());
  }
  // BZ/2 at level 2: 16 cells over 2 targets, 8 each.
  const Comparison cmp = comparison_map(build_example("bg:z2", 2).rel.cat, 2);
  std::vector<int> fiber(cmp.hc.space.size(2), 0);
  for (CellId t : cmp.map.levels[2]) ++fiber[t];
  CHECK(fiber == std::vector<int>{8, 8});
}

TEST_CASE("vertex chains") {
  const SimplicialCategory c = build_example("hom-simplex:2", 2).rel.cat;
  const Comparison cmp = comparison_map(c, 2);
  // The s_0-degenerate columns of the binerve are chains of vertices.
  for (int k = 0; k <= 2; ++k)
    for (CellId v = 0; v < cmp.binerve.marked.space.size(k, 0); ++v) {
      const CellChain ch = cmp.binerve.chain(k, 0, v);
      CellChain up = ch;
      up.level = k;
      for (std::size_t t = 0; t < ch.morphisms.size(); ++t)
        up.morphisms[t] = c.hom(ch.objects[t], ch.objects[t + 1]).degenerate_up(0, ch.morphisms[t], k);
      CHECK(comparison_simplex(c, up) == vertex_chain_simplex(c, ch));
    }
}

TEST_CASE("chi composites") {
  const ChiComposite chi = chi_simplex(2, 1, {0, 1, 2}, {0, 1, 1});
  CHECK(chi.objects() == std::vector<int>{0, 1, 2});
  // S = {0,1,2} in P_{0,2}: coordinate at p=2 is 1, at p=1 is 0 (top first).
  CHECK(chi.hom(0, 2, {0b111}) == std::vector<Sequence>{{1}, {0}});
  CHECK(chi.hom(0, 2, {0b101}) == std::vector<Sequence>{{0}, {0}});
  CHECK_THROWS_AS(chi_simplex(2, 1, {1, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(chi_simplex(2, 1, {0, 1}, {1, 0}), std::invalid_argument);

  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const PrismCells pr = prism(p, q);
      const SimplicialCategory tgt = interval_power_cat(p, standard_simplex(q, 3));
      for (auto [n, cell] : pr.order) {
        const auto [t1, t2] = pr.cell(n, cell);
        const FrakC src = frak_c(n, 3);
        const SimplicialFunctor f = chi_functor(chi_simplex(p, q, t1, t2), src);
        CHECK(validate_functor(src.cat, tgt, f).ok());
      }
    }
}

TEST_CASE("prism cells") {
  const PrismCells pr = prism(2, 1);
  // Strict chains in [2] x [1]; the Euler characteristic is 1.
  std::vector<int> per_level(4, 0);
  for (auto [n, c] : pr.order) ++per_level[n];
  CHECK(per_level == std::vector<int>{6, 12, 10, 3});
  for (int n = 0; n <= 3; ++n)
    for (CellId c = 0; c < pr.space.size(n); ++c) {
      const auto [a, b] = pr.cell(n, c);
      CHECK(pr.cell_id(a, b) == c);
    }
}

TEST_CASE("Cls of Delta^1 with degenerate marking") {
  const SSet d1 = standard_simplex(1, 3);
  MarkedSSet m{d1, {}};
  for (CellId e = 0; e < d1.size(1); ++e) m.marked.push_back(d1.degenerate(1, e) ? 1 : 0);
  const ClsDiagram cls = cls_diagram(m, 2, 1);
  CHECK(validate_bisset(cls.marked.space).ok());
  CHECK(validate_marked_bisset(cls.marked).ok());
  CHECK(cls.marked.space.size(1, 0) == 3);
  CHECK(cls.marked.space.size(0, 1) == 2);
  // Oracle: maps Delta^p x Delta^q -> Delta^1 sending every {i} x Delta^q edge to a degenerate edge.
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 1; ++q) {
      const PrismCells pr = prism(p, q);
      std::size_t count = 0;
      for (const auto& u : enumerate_maps(pr.space, d1)) {
        bool ok = true;
        for (CellId e = 0; p + q > 0 && e < pr.space.size(1); ++e) {
          const auto [s1, s2] = pr.cell(1, e);
          if (s1[0] == s1[1] && !d1.degenerate(1, u.levels[1][e])) ok = false;
        }
        count += ok;
      }
      CHECK(cls.marked.space.size(p, q) == count);
    }
  CHECK_THROWS_AS(cls_diagram(m, 2, 2), TruncationError);
}

TEST_CASE("theta is a map of marked bisimplicial sets") {
  for (const std::string name : {"bg:z2", "discrete:poset01", "hom-simplex:1/whole"}) {
    INFO(name);
    const RelativeSimplicialCategory r = build_example(name, 2).rel;
    const Binerve b = binerve_marked(r, 2, 1);
    const HcNerve hc = hc_nerve(r.cat, 3);
    const ClsDiagram cls = cls_diagram(hc_marked(r, hc), 2, 1);
    const BisimplicialMap f = theta_map(r, b, hc, cls);
    CHECK(validate_marked_map(b.marked, cls.marked, f).ok());
    for (int k = 0; k <= 1; ++k)
      for (CellId x = 0; x < b.marked.space.size(k, k); ++x) {
        Sequence id(k + 1);
        for (int t = 0; t <= k; ++t) id[t] = t;
        const CellChain ch = b.chain(k, k, x);
        CHECK(theta_simplex(r.cat, ch, id, id) == comparison_simplex(r.cat, ch));
      }
  }
}
