#include <array>
#include <numeric>
#include <random>

#include "doctest.h"
#include "nervekit/examples.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"

using namespace nervekit;

namespace {

// Determinant by cofactor expansion; fine for the tiny sizes used here.
mpz_class det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
  }
  return d;
}

// Determinantal divisors d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
std::vector<mpz_class> invariant_factors(const std::vector<std::vector<long>>& a) {
  const std::size_t R = a.size(), C = a.empty() ? 0 : a[0].size();
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= std::min(R, C); ++k) {
    mpz_class g = 0;
    for (unsigned rm = 0; rm < (1u << R); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << C); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<long>> sub;
        for (std::size_t r = 0; r < R; ++r) {
          if (!(rm & (1u << r))) continue;
          std::vector<long> row;
          for (std::size_t c = 0; c < C; ++c)
            if (cm & (1u << c)) row.push_back(a[r][c]);
          sub.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(det(sub))).get_mpz_t());
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

// F2 Betti numbers by plain Gaussian elimination on the normalized complex.
std::size_t f2_rank(std::vector<std::vector<char>> m) {
  std::size_t rank = 0;
  const std::size_t R = m.size(), C = R ? m[0].size() : 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && !m[p][c]) ++p;
    if (p == R) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < R; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < C; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> f2_betti(const SSet& x, int max_deg) {
  std::vector<std::vector<CellId>> nd;
  for (int n = 0; n <= max_deg + 1; ++n) nd.push_back(x.nondegenerate(n));
  std::vector<std::size_t> rk(max_deg + 2, 0);
  for (int n = 1; n <= max_deg + 1; ++n) {
    std::vector<std::vector<char>> m(nd[n - 1].size(), std::vector<char>(nd[n].size(), 0));
    for (std::size_t j = 0; j < nd[n].size(); ++j)
      for (int i = 0; i <= n; ++i) {
        const CellId f = x.face(n, i, nd[n][j]);
        auto it = std::find(nd[n - 1].begin(), nd[n - 1].end(), f);
        if (it != nd[n - 1].end()) m[it - nd[n - 1].begin()][j] ^= 1;
      }
    rk[n] = f2_rank(m);
  }
  std::vector<std::size_t> out;
  for (int n = 0; n <= max_deg; ++n) out.push_back(nd[n].size() - rk[n] - rk[n + 1]);
  return out;
}

// K(Z/2, 2) as normalized Z/2 2-cocycles on Delta^n. A key lists the values
// on the triples of [n] in lexicographic order.
SSet cocycle_model(int dim) {
  auto triples = [](int n) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    return out;
  };
  auto pull = [&](const std::vector<int>& c, int n, const Sequence& alpha) {
    const auto src = triples(n);
    std::vector<int> out;
    for (const auto& t : triples(static_cast<int>(alpha.size()) - 1)) {
      const std::array<int, 3> img{alpha[t[0]], alpha[t[1]], alpha[t[2]]};
      const auto it = std::find(src.begin(), src.end(), img);
      out.push_back(it == src.end() ? 0 : c[it - src.begin()]);
    }
    return out;
  };
  KeyedCells<std::vector<int>> cells;
  for (int n = 0; n <= dim; ++n) {
    const auto ts = triples(n);
    cells.keys.emplace_back();
    for (unsigned bits = 0; bits < (1u << ts.size()); ++bits) {
      std::vector<int> c;
      for (std::size_t t = 0; t < ts.size(); ++t) c.push_back((bits >> t) & 1);
      bool closed = true;
      for (int a = 0; a <= n && closed; ++a)
        for (int b = a + 1; b <= n && closed; ++b)
          for (int d = b + 1; d <= n && closed; ++d)
            for (int e = d + 1; e <= n && closed; ++e) {
              auto at = [&](int x, int y, int z) {
                return c[std::find(ts.begin(), ts.end(), std::array<int, 3>{x, y, z}) - ts.begin()];
              };
              closed = (at(b, d, e) + at(a, d, e) + at(a, b, e) + at(a, b, d)) % 2 == 0;
            }
      if (closed) cells.keys[n].push_back(c);
    }
  }
  auto iota = [](int n) {
    Sequence s(n + 1);
    std::iota(s.begin(), s.end(), 0);
    return s;
  };
  return build_keyed(
      cells, [&](int n, int i, const std::vector<int>& c) { return pull(c, n, drop_entry(iota(n), i)); },
      [&](int n, int i, const std::vector<int>& c) { return pull(c, n, repeat_entry(iota(n), i)); });
}

std::vector<std::size_t> ranks(const HomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& g : r.groups) out.push_back(g.rank);
  return out;
}

}  // namespace

TEST_CASE("Smith invariants against determinantal divisors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), shape(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t R = shape(rng), C = shape(rng);
    std::vector<std::vector<long>> a(R, std::vector<long>(C));
    SparseMatrix m(R, C);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c) {
        a[r][c] = entry(rng) * (trial % 3 == 0 ? 2 : 1);
        m.add(r, c, a[r][c]);
      }
    const auto oracle = invariant_factors(a);
    std::vector<mpz_class> torsion;
    for (const auto& d : oracle)
      if (d != 1) torsion.push_back(d);
    const SmithInvariants sp = smith_invariants(m);
    CHECK(sp.rank == oracle.size());
    CHECK(sp.torsion == torsion);
    const SmithInvariants dn = smith_invariants(DenseMatrix::from_sparse(m), Coeff::Z);
    CHECK(dn.rank == oracle.size());
    CHECK(dn.torsion == torsion);
  }
}

TEST_CASE("column reduction gives a kernel basis") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    DenseMatrix m(3, 5);
    for (auto& v : m.a) v = entry(rng);
    const ColumnReduction cr = column_reduce(m, Coeff::Z);
    for (std::size_t k : cr.kernel)
      for (std::size_t r = 0; r < 3; ++r) {
        mpz_class s = 0;
        for (std::size_t c = 0; c < 5; ++c) s += m.at(r, c) * cr.v.at(c, k);
        CHECK(s == 0);
      }
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < 5; ++k) s += cr.v.at(r, k) * cr.vinv.at(k, c);
        CHECK(s == (r == c ? 1 : 0));
      }
    const SmithInvariants inv = smith_invariants(m, Coeff::Z);
    CHECK(cr.kernel.size() == 5 - inv.rank);
  }
}

TEST_CASE("homology of small spaces") {
  const HomologyReport d1 = homology(standard_simplex(1, 2), Coeff::Z, 1);
  CHECK(d1.validity_bound == 1);
  CHECK(d1.groups[0].to_string() == "Z");
  CHECK(d1.groups[1].to_string() == "0");

  const HomologyReport circle = homology(boundary_simplex(2, 2), Coeff::Z, 1);
  CHECK(circle.groups[0].to_string() == "Z");
  CHECK(circle.groups[1].to_string() == "Z");

  const SSet nz2 = build_example("bg:z2", 3).rel.cat.hom(0, 0);
  const HomologyReport z = homology(nz2, Coeff::Z, 2);
  CHECK(z.groups[0].to_string() == "Z");
  CHECK(z.groups[1].to_string() == "Z/2");
  CHECK(z.groups[2].to_string() == "0");
  CHECK(ranks(homology(nz2, Coeff::F2, 2)) == f2_betti(nz2, 2));
  CHECK(ranks(homology(nz2, Coeff::F2, 2)) == std::vector<std::size_t>{1, 1, 1});

  CHECK_THROWS_AS(homology(nz2, Coeff::Z, 3), DegreeError);
  CHECK_THROWS_AS(homology(nz2, Coeff::Z, -1), DegreeError);
}

TEST_CASE("boundary squares to zero") {
  for (const SSet& x : {classifying_space(build_example("bg:z2", 3).rel.cat, 3), standard_simplex(3, 4),
                        hc_nerve(build_example("hom-simplex:1", 2).rel.cat, 3).space}) {
    const ChainComplex cx = normalized_chains(x);
    for (int n = 2; n <= cx.dim; ++n)
      CHECK(multiply(cx.boundary[n - 1], cx.boundary[n]).nonzeros() == 0);
  }
}

TEST_CASE("F2 homology agrees with plain elimination") {
  const SimplicialCategory c = build_example("bg:z2", 4).rel.cat;
  const SSet b = classifying_space(c, 4);
  const auto oracle = f2_betti(b, 3);
  CHECK(ranks(homology(b, Coeff::F2, 3)) == oracle);
  // B of the simplicial group NZ/2 has the F2 homology of K(Z/2, 2).
  const SSet k = cocycle_model(4);
  CHECK(k.sizes() == std::vector<std::size_t>{1, 1, 2, 8, 64});
  CHECK(validate_sset(k).ok());
  CHECK(oracle == f2_betti(k, 3));
  const SSet hc = hc_nerve(c, 4).space;
  CHECK(ranks(homology(hc, Coeff::F2, 3)) == f2_betti(hc, 3));
}

TEST_CASE("pi0") {
  CHECK(pi0(disjoint_union(point(1), point(1))).size() == 2);
  CHECK(pi0(build_example("bg:z2", 2).rel.cat.hom(0, 0)).size() == 1);
  CHECK(pi0(poset_nerve(FinitePoset::antichain(3), 2).space).size() == 3);
  const auto classes = pi0(disjoint_union(standard_simplex(1, 1), point(1)));
  CHECK(classes == std::vector<std::vector<CellId>>{{0, 1}, {2}});
}

TEST_CASE("induced chain maps") {
  const SSet nz2 = build_example("bg:z2", 3).rel.cat.hom(0, 0);
  const ChainMapReport id = induced_chain_iso(nz2, nz2, identity_map(nz2), Coeff::Z, 2);
  CHECK(std::all_of(id.iso.begin(), id.iso.end(), [](char v) { return v; }));
  CHECK(std::all_of(id.commutes.begin(), id.commutes.end(), [](char v) { return v; }));

  // The unique vertex Delta^0 -> NZ/2.
  const SSet pt = point(3);
  SimplicialMap inc;
  for (int n = 0; n <= 3; ++n) inc.levels.push_back({nz2.degenerate_up(0, 0, n)});
  const ChainMapReport r = induced_chain_iso(pt, nz2, inc, Coeff::F2, 2);
  CHECK(r.iso == std::vector<char>{1, 0, 0});

  // Folding two circles onto one is surjective on homology but not injective.
  const SSet circle = boundary_simplex(2, 2);
  const SSet two = disjoint_union(circle, circle);
  SimplicialMap fold;
  for (int n = 0; n <= 2; ++n) {
    fold.levels.emplace_back(two.size(n));
    for (CellId c = 0; c < two.size(n); ++c) fold.levels[n][c] = static_cast<CellId>(c % circle.size(n));
  }
  REQUIRE(validate_map(two, circle, fold).ok());
  const ChainMapReport fr = induced_chain_iso(two, circle, fold, Coeff::Z, 1);
  CHECK(fr.iso == std::vector<char>{0, 0});
}

TEST_CASE("comparison map on homology") {
  const SimplicialCategory c = build_example("bg:z2", 4).rel.cat;
  const Comparison cmp = comparison_map(c, 4);
  const ChainMapReport r = induced_chain_iso(cmp.b, cmp.hc.space, cmp.map, Coeff::F2, 2);
  CHECK(r.iso == std::vector<char>{1, 1, 1});
  CHECK(ranks(r.source) == f2_betti(cmp.b, 2));
  CHECK(ranks(r.target) == f2_betti(cmp.hc.space, 2));
  const ChainMapReport z = induced_chain_iso(cmp.b, cmp.hc.space, cmp.map, Coeff::Z, 2);
  CHECK(z.iso == std::vector<char>{1, 1, 1});
}
