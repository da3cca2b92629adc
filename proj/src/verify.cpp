#include "nervekit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace nervekit {

namespace {

Sequence iota_seq(int n) {
  Sequence s(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) s[t] = t;
  return s;
}

std::string vertices_string(const SSet& x, int n, CellId c) {
  Sequence v;
  for (int k = 0; k <= n; ++k) v.push_back(static_cast<int>(x.vertex(n, c, k)));
  return sequence_string(v);
}

std::string tuple_string(const std::vector<Sequence>& tuple) {
  std::string s = "(";
  for (std::size_t t = 0; t < tuple.size(); ++t) s += (t ? "," : "") + sequence_string(tuple[t]);
  return s + ")";
}

std::string chain_string(const std::vector<std::uint32_t>& chain) {
  std::string s;
  for (std::uint32_t m : chain) s += (s.empty() ? "" : "<") + mask_string(m);
  return s;
}

std::vector<std::uint32_t> without(std::vector<std::uint32_t> v, int i) {
  v.erase(v.begin() + i);
  return v;
}

std::string cell_ref(int p, int q, CellId c) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ") cell " + std::to_string(c);
}

// Restriction of a horizontal p-cell to the vertices in keep, via hface.
CellId restrict_h(const BisimplicialSet& x, int p, int q, CellId c, std::uint32_t keep) {
  for (int j = p; j >= 0; --j)
    if (!(keep & (1u << j))) c = x.hface[p--][q][j][c];
  return c;
}

CellId restrict_v(const BisimplicialSet& x, int p, int q, CellId c, std::uint32_t keep) {
  for (int j = q; j >= 0; --j)
    if (!(keep & (1u << j))) c = x.vface[p][q--][j][c];
  return c;
}

}  // namespace

// Horns -----------------------------------------------------------------------

CheckResult horn_check(const SSet& x, int n, int k) {
  CheckResult res("horn " + std::to_string(n) + "," + std::to_string(k));
  if (n > x.dim())
    throw TruncationError("horn_check: level " + std::to_string(n) + " above truncation " + std::to_string(x.dim()));
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn_check: bad horn");
  const SSet h = horn(n, k, n);
  // Face i of Delta^n as a cell of the horn.
  std::vector<CellId> face_cell(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    for (CellId c = 0; c < h.size(n - 1); ++c) {
      bool match = true;
      for (int t = 0; t < n && match; ++t) match = static_cast<int>(h.vertex(n - 1, c, t)) == (t < i ? t : t + 1);
      if (match) face_cell[i] = c;
    }
  }
  std::unordered_set<std::vector<CellId>, VecHash> fillers;
  for (CellId y = 0; y < x.size(n); ++y) {
    std::vector<CellId> key;
    for (int i = 0; i <= n; ++i)
      if (i != k) key.push_back(x.face(n, i, y));
    fillers.insert(std::move(key));
  }
  std::int64_t maps = 0, failures = 0;
  FaceIndex fx(x);
  for_each_map(h, fx, {}, [&](const SimplicialMap& u) {
    ++maps;
    std::vector<CellId> key;
    for (int i = 0; i <= n; ++i)
      if (i != k) key.push_back(u.levels[n - 1][face_cell[i]]);
    if (fillers.count(key)) return true;
    ++failures;
    if (res.witnesses.size() < 16) {
      std::string w = "Lambda^" + std::to_string(n) + "_" + std::to_string(k) + ":";
      for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        std::uint32_t mask = ((1u << (n + 1)) - 1) & ~(1u << i);
        w += " " + mask_string(mask) + " -> " + vertices_string(x, n - 1, u.levels[n - 1][face_cell[i]]);
      }
      res.fail(w + " has no filler");
    } else {
      res.pass = false;
    }
    return true;
  });
  res.bounds = {{"n", n}, {"k", k}, {"horn_maps", maps}, {"unfilled", failures}};
  return res;
}

CheckResult horn_check_all(const SSet& x, int n_max, bool inner_only) {
  CheckResult res(inner_only ? "inner horns" : "horns");
  std::int64_t maps = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      if (inner_only && (k == 0 || k == n)) continue;
      const CheckResult one = horn_check(x, n, k);
      maps += one.bounds[2].second;
      if (!one.pass) res.pass = false;
      for (const auto& w : one.witnesses)
        if (res.witnesses.size() < 16) res.witnesses.push_back(w);
    }
  res.bounds = {{"n_max", n_max}, {"horn_maps", maps}};
  return res;
}

// Segal and column formula ----------------------------------------------------------

CheckResult segal_column_check(const Binerve& b, const SimplicialCategory& c, int n_max) {
  CheckResult res("segal/column");
  const BisimplicialSet& x = b.marked.space;
  const std::size_t N = c.objects();
  n_max = std::min(n_max, x.P);
  auto object_of = [&](int q, CellId v) { return b.chain(0, q, v).objects[0]; };
  for (int q = 0; q <= x.Q; ++q) {
    // Column 0: objects.
    std::set<ObjId> seen;
    for (CellId v = 0; v < x.size(0, q); ++v) seen.insert(object_of(q, v));
    if (seen.size() != N || x.size(0, q) != N) res.fail("column 0 at level " + std::to_string(q) + " is not the object set");
    if (x.P < 1) continue;
    // Column 1: coprod C(x, y)_q, with endpoints and vertical operators.
    std::size_t expected = 0;
    for (ObjId s = 0; s < N; ++s)
      for (ObjId t = 0; t < N; ++t) expected += c.hom(s, t).size(q);
    std::set<std::tuple<ObjId, ObjId, CellId>> hits;
    for (CellId u = 0; u < x.size(1, q); ++u) {
      const CellChain ch = b.chain(1, q, u);
      const ObjId s = ch.objects[0], t = ch.objects[1];
      const CellId f = ch.morphisms[0];
      hits.emplace(s, t, f);
      if (object_of(q, x.hface[1][q][1][u]) != s || object_of(q, x.hface[1][q][0][u]) != t)
        res.fail(cell_ref(1, q, u) + ": endpoints disagree with horizontal faces");
      const SSet& h = c.hom(s, t);
      for (int i = 0; q > 0 && i <= q; ++i) {
        const CellChain g = b.chain(1, q - 1, x.vface[1][q][i][u]);
        if (g.objects != ch.objects || g.morphisms[0] != h.face(q, i, f))
          res.fail(cell_ref(1, q, u) + ": vertical d_" + std::to_string(i) + " is not the hom face");
      }
      for (int i = 0; q < x.Q && i <= q; ++i) {
        const CellChain g = b.chain(1, q + 1, x.vdegen[1][q][i][u]);
        if (g.objects != ch.objects || g.morphisms[0] != h.degen(q, i, f))
          res.fail(cell_ref(1, q, u) + ": vertical s_" + std::to_string(i) + " is not the hom degeneracy");
      }
    }
    if (hits.size() != x.size(1, q) || x.size(1, q) != expected)
      res.fail("column 1 at level " + std::to_string(q) + ": " + std::to_string(x.size(1, q)) + " cells, " +
               std::to_string(expected) + " hom cells");
    // Paths of length n weighted by hom sizes, by dynamic programming over objects.
    std::vector<std::uint64_t> paths(N, 1);
    for (int n = 1; n <= n_max; ++n) {
      std::vector<std::uint64_t> next(N, 0);
      for (ObjId s = 0; s < N; ++s)
        for (ObjId t = 0; t < N; ++t) next[t] += paths[s] * c.hom(s, t).size(q);
      paths = next;
      if (n < 2) continue;
      std::uint64_t formula = 0;
      for (auto v : paths) formula += v;
      // Segal map to n composable edges.
      std::set<std::vector<CellId>> edges_seen;
      std::set<std::pair<CellId, CellId>> pullback_seen;
      for (CellId z = 0; z < x.size(n, q); ++z) {
        std::vector<CellId> edges;
        for (int t = 1; t <= n; ++t) edges.push_back(restrict_h(x, n, q, z, (1u << (t - 1)) | (1u << t)));
        for (int t = 1; t < n; ++t)
          if (x.hface[1][q][0][edges[t - 1]] != x.hface[1][q][1][edges[t]])
            res.fail(cell_ref(n, q, z) + ": consecutive edges do not compose");
        if (!edges_seen.insert(edges).second) res.fail(cell_ref(n, q, z) + ": Segal map not injective");
        const CellId front = restrict_h(x, n, q, z, (1u << n) - 1);
        const CellId last = edges.back();
        if (!pullback_seen.emplace(front, last).second)
          res.fail(cell_ref(n, q, z) + ": pullback map not injective");
      }
      // Composable edge tuples and pullback pairs, counted independently.
      std::uint64_t composable = 0;
      {
        std::vector<std::uint64_t> ends(x.size(0, q), 1);
        for (int t = 1; t <= n; ++t) {
          std::vector<std::uint64_t> nx(x.size(0, q), 0);
          for (CellId e = 0; e < x.size(1, q); ++e) nx[x.hface[1][q][0][e]] += ends[x.hface[1][q][1][e]];
          ends = nx;
        }
        for (auto v : ends) composable += v;
      }
      std::uint64_t pairs = 0;
      for (CellId w = 0; w < x.size(n - 1, q); ++w) {
        const CellId tail = restrict_h(x, n - 1, q, w, 1u << (n - 1));
        for (CellId e = 0; e < x.size(1, q); ++e) pairs += x.hface[1][q][1][e] == tail;
      }
      const std::string where = "column " + std::to_string(n) + " at level " + std::to_string(q);
      if (x.size(n, q) != formula) res.fail(where + ": " + std::to_string(x.size(n, q)) + " cells, column formula gives " + std::to_string(formula));
      if (x.size(n, q) != composable) res.fail(where + ": Segal map not surjective");
      if (x.size(n, q) != pairs) res.fail(where + ": pullback map not surjective");
    }
  }
  res.bounds = {{"n_max", n_max}, {"Q", x.Q}};
  return res;
}

CheckResult segal_column_check(const RelativeSimplicialCategory& r, int n_max, int Q) {
  return segal_column_check(binerve_marked(r, n_max, Q), r.cat, n_max);
}

// Fibers ----------------------------------------------------------------------

CheckResult fiber_check(const RelativeSimplicialCategory& r) {
  const SimplicialCategory& c = r.cat;
  CheckResult res("fiber");
  const Binerve b = binerve_marked(r, 1, c.dim);
  const BisimplicialSet& x = b.marked.space;
  const std::size_t N = c.objects();
  for (ObjId s = 0; s < N; ++s)
    for (ObjId t = 0; t < N; ++t) {
      const SSet& h = c.hom(s, t);
      const std::string pair = "(" + c.names[s] + "," + c.names[t] + ")";
      // fiber[q][f] = column-1 cell over (s, t) identified with f.
      std::vector<std::vector<CellId>> fiber(c.dim + 1);
      for (int q = 0; q <= c.dim; ++q) {
        fiber[q].assign(h.size(q), static_cast<CellId>(-1));
        std::size_t count = 0;
        for (CellId u = 0; u < x.size(1, q); ++u) {
          if (b.chain(0, q, x.hface[1][q][1][u]).objects[0] != s) continue;
          if (b.chain(0, q, x.hface[1][q][0][u]).objects[0] != t) continue;
          ++count;
          const CellId f = b.chain(1, q, u).morphisms[0];
          if (f >= h.size(q) || fiber[q][f] != static_cast<CellId>(-1))
            res.fail(pair + " level " + std::to_string(q) + ": cell " + std::to_string(u) + " not matched injectively");
          else
            fiber[q][f] = u;
        }
        if (count != h.size(q))
          res.fail(pair + " level " + std::to_string(q) + ": fiber has " + std::to_string(count) + " cells, hom has " +
                   std::to_string(h.size(q)));
      }
      if (!res.pass) continue;
      for (int q = 0; q <= c.dim; ++q)
        for (CellId f = 0; f < h.size(q); ++f) {
          const CellId u = fiber[q][f];
          for (int i = 0; q > 0 && i <= q; ++i)
            if (x.vface[1][q][i][u] != fiber[q - 1][h.face(q, i, f)])
              res.fail(pair + " level " + std::to_string(q) + " cell " + std::to_string(f) + ": d_" + std::to_string(i));
          for (int i = 0; q < c.dim && i <= q; ++i)
            if (x.vdegen[1][q][i][u] != fiber[q + 1][h.degen(q, i, f)])
              res.fail(pair + " level " + std::to_string(q) + " cell " + std::to_string(f) + ": s_" + std::to_string(i));
        }
    }
  res.bounds = {{"pairs", static_cast<std::int64_t>(N * N)}, {"levels", c.dim}};
  return res;
}

// Consistency -------------------------------------------------------------------

CheckResult consistency_check(const SimplicialCategory& c, int L) {
  CheckResult res("consistency");
  const Comparison cmp = comparison_map(c, L);
  const BisimplicialSet& x = cmp.binerve.marked.space;
  std::int64_t diagonal = 0, restrictions = 0;
  for (int k = 0; k <= L; ++k)
    for (CellId cell = 0; cell < x.size(k, k); ++cell) {
      ++diagonal;
      const HcKey key = theta_simplex(c, cmp.binerve.chain(k, k, cell), iota_seq(k), iota_seq(k));
      auto it = cmp.hc.index[k].find(key);
      if (it == cmp.hc.index[k].end() || it->second != cmp.map.levels[k][cell])
        res.fail("diagonal " + cell_ref(k, k, cell) + ": theta at (id,id) differs from the f_k route");
    }
  for (int p = 0; p <= L; ++p)
    for (int q = 0; q <= L; ++q)
      for (CellId cell = 0; cell < x.size(p, q); ++cell)
        for (int i = 0; i <= q; ++i) {
          ++restrictions;
          const CellId v = restrict_v(x, p, q, cell, 1u << i);
          const HcKey lhs = theta_simplex(c, cmp.binerve.chain(p, q, cell), iota_seq(p), Sequence(p + 1, i));
          if (lhs != vertex_chain_simplex(c, cmp.binerve.chain(p, 0, v)))
            res.fail(cell_ref(p, q, cell) + ": restriction to vertex " + std::to_string(i) +
                     " is not the vertex chain");
        }
  res.bounds = {{"L", L}, {"diagonal_cells", diagonal}, {"vertex_restrictions", restrictions}};
  return res;
}

CheckResult discrete_collapse_check(const SimplicialCategory& c, int L) {
  CheckResult res("discrete collapse");
  for (const SSet& h : c.homs)
    for (int n = 1; n <= h.dim(); ++n)
      if (h.size(n) != h.size(0)) {
        res.fail("category is not discrete");
        return res;
      }
  const CategoryNerve n0 = nerve_cat(level_category(c, 0), L);
  const Comparison cmp = comparison_map(c, L);
  SimplicialMap from_b, from_hc;
  for (int k = 0; k <= L; ++k) {
    from_b.levels.emplace_back(cmp.b.size(k));
    for (CellId cell = 0; cell < cmp.b.size(k); ++cell) {
      const CellChain ch = cmp.binerve.chain(k, k, cell);
      std::vector<CellId> key{ch.objects[0]};
      for (int t = 0; t < k; ++t) {
        key.push_back(ch.objects[t + 1]);
        key.push_back(c.hom(ch.objects[t], ch.objects[t + 1]).vertex(k, ch.morphisms[t], 0));
      }
      from_b.levels[k][cell] = n0.find(key);
    }
    from_hc.levels.emplace_back(cmp.hc.space.size(k));
    const HcShape& sh = hc_shape(k);
    for (CellId cell = 0; cell < cmp.hc.space.size(k); ++cell) {
      const HcKey& hk = cmp.hc.keys[k][cell];
      std::vector<CellId> key{hk[0]};
      for (int t = 0; t < k; ++t) {
        key.push_back(hk[t + 1]);
        key.push_back(hk[k + 1 + sh.find({(1u << t) | (1u << (t + 1))})]);
      }
      from_hc.levels[k][cell] = n0.find(key);
    }
  }
  auto bijective = [&](const SimplicialMap& f, const char* what) {
    for (int k = 0; k <= L; ++k) {
      std::set<CellId> img(f.levels[k].begin(), f.levels[k].end());
      if (img.size() != f.levels[k].size() || img.size() != n0.space.size(k))
        res.fail(std::string(what) + " is not a bijection at level " + std::to_string(k));
    }
  };
  bijective(from_b, "B(C) -> N(C_0)");
  bijective(from_hc, "N_hc(C) -> N(C_0)");
  res.absorb(validate_map(cmp.b, n0.space, from_b));
  res.absorb(validate_map(cmp.hc.space, n0.space, from_hc));
  for (int k = 0; k <= L; ++k)
    for (CellId cell = 0; cell < cmp.b.size(k); ++cell)
      if (from_hc.levels[k][cmp.map.levels[k][cell]] != from_b.levels[k][cell])
        res.fail("level " + std::to_string(k) + " cell " + std::to_string(cell) + ": comparison is not the identification");
  res.bounds = {{"L", L}};
  return res;
}

// theta -------------------------------------------------------------------------

CheckResult theta_check(const RelativeSimplicialCategory& r, int P, int Q, bool cross_check) {
  const SimplicialCategory& c = r.cat;
  CheckResult res("theta");
  if (c.dim < std::max(Q, P + Q - 1))
    throw TruncationError("theta_check: bidegree (" + std::to_string(P) + ", " + std::to_string(Q) +
                          ") needs hom truncation " + std::to_string(std::max(Q, P + Q - 1)));
  const Binerve b = binerve_marked(r, P, Q);
  const BisimplicialSet& x = b.marked.space;
  std::int64_t cells = 0, simplices = 0;
  auto note = [&](const std::string& w) {
    if (res.witnesses.size() < 16) res.witnesses.push_back(w);
    res.pass = false;
  };
  std::map<std::pair<int, int>, PrismCells> prisms;
  auto prism_at = [&](int p, int q) -> const PrismCells& {
    auto it = prisms.find({p, q});
    if (it == prisms.end()) it = prisms.emplace(std::make_pair(p, q), prism(p, q)).first;
    return it->second;
  };
  // theta values per binerve cell, keyed by the packed pair (t1, t2).
  std::map<std::tuple<int, int, CellId>, std::unordered_map<std::string, HcKey>> memo;
  auto theta_at = [&](int p, int q, CellId cell, const CellChain& ch, const Sequence& t1,
                      const Sequence& t2) -> const HcKey& {
    auto& m = memo[{p, q, cell}];
    std::string k;
    for (int v : t1) k.push_back(static_cast<char>(v));
    k.push_back(-1);
    for (int v : t2) k.push_back(static_cast<char>(v));
    auto it = m.find(k);
    if (it == m.end()) it = m.emplace(std::move(k), theta_simplex(c, ch, t1, t2)).first;
    return it->second;
  };
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      const PrismCells& pr = prism_at(p, q);
      for (CellId cell = 0; cell < x.size(p, q); ++cell) {
        ++cells;
        const CellChain ch = b.chain(p, q, cell);
        const bool marked = p == 1 && b.marked.marked[q][cell];
        auto theta = [&](const Sequence& t1, const Sequence& t2) -> const HcKey& {
          return theta_at(p, q, cell, ch, t1, t2);
        };
        for (auto [n, tc] : pr.order) {
          ++simplices;
          const auto [t1, t2] = pr.cell(n, tc);
          const std::string where = cell_ref(p, q, cell) + " at " + sequence_string(t1) + "x" + sequence_string(t2);
          const HcKey key = theta(t1, t2);
          const ValidationReport vr = validate_hc_simplex(c, n, key);
          if (!vr.ok()) {
            note(where + ": " + vr.violations[0].rule + " " + vr.violations[0].witness);
            continue;
          }
          for (int i = 0; n > 0 && i <= n; ++i)
            if (hc_face(n, i, key) != theta(drop_entry(t1, i), drop_entry(t2, i)))
              note(where + ": d_" + std::to_string(i) + " not compatible");
          for (int i = 0; n < p + q && i <= n; ++i)
            if (hc_degen(c, n, i, key) != theta(repeat_entry(t1, i), repeat_entry(t2, i)))
              note(where + ": s_" + std::to_string(i) + " not compatible");
          if (n == 1) {
            const bool in_w = r.in_sub(key[0], key[1], 0, key[2]);
            if (t1[0] == t1[1] && !in_w) note(where + ": slice edge not marked");
            if (marked && !in_w) note(where + ": marked cell has an unmarked edge");
          }
        }
        // Naturality: theta(op x)(tau) = theta(x)((op x id) tau), in both directions.
        auto natural = [&](int p2, int q2, CellId y, const Sequence& alpha, const Sequence& beta, const std::string& op) {
          const PrismCells& pr2 = prism_at(p2, q2);
          const CellChain ych = b.chain(p2, q2, y);
          for (auto [n, tc] : pr2.order) {
            auto [t1, t2] = pr2.cell(n, tc);
            const HcKey lhs = theta_at(p2, q2, y, ych, t1, t2);
            for (int& v : t1) v = alpha[v];
            for (int& v : t2) v = beta[v];
            if (lhs != theta(t1, t2)) {
              note(cell_ref(p, q, cell) + ": " + op + " not natural");
              return;
            }
          }
        };
        for (int i = 0; p > 0 && i <= p; ++i)
          natural(p - 1, q, x.hface[p][q][i][cell], drop_entry(iota_seq(p), i), iota_seq(q), "horizontal d_" + std::to_string(i));
        for (int i = 0; p < P && i <= p; ++i)
          natural(p + 1, q, x.hdegen[p][q][i][cell], repeat_entry(iota_seq(p), i), iota_seq(q), "horizontal s_" + std::to_string(i));
        for (int i = 0; q > 0 && i <= q; ++i)
          natural(p, q - 1, x.vface[p][q][i][cell], iota_seq(p), drop_entry(iota_seq(q), i), "vertical d_" + std::to_string(i));
        for (int i = 0; q < Q && i <= q; ++i)
          natural(p, q + 1, x.vdegen[p][q][i][cell], iota_seq(p), repeat_entry(iota_seq(q), i), "vertical s_" + std::to_string(i));
      }
    }
  res.bounds = {{"P", P}, {"Q", Q}, {"binerve_cells", cells}, {"theta_simplices", simplices}};
  if (cross_check) {
    const int P2 = std::min(P, 2), Q2 = std::min(Q, 1);
    const HcNerve hc = hc_nerve(c, P2 + Q2);
    const ClsDiagram cls = cls_diagram(hc_marked(r, hc), P2, Q2);
    const Binerve b2 = binerve_marked(r, P2, Q2);
    const ValidationReport vr = validate_marked_map(b2.marked, cls.marked, theta_map(r, b2, hc, cls));
    for (const auto& v : vr.violations) note("materialized Cls: " + v.rule + " " + v.witness);
    res.bounds.emplace_back("cross_check_P", P2);
    res.bounds.emplace_back("cross_check_Q", Q2);
  }
  return res;
}

// Uniqueness ----------------------------------------------------------------------

HcKey comparison_key(int n, int dim) {
  (void)dim;
  std::vector<ObjId> objects;
  for (int t = 0; t <= n; ++t) objects.push_back(static_cast<ObjId>(t));
  return hc_from_slots(n, objects, [n](const HcShape::Slot& s) {
    std::vector<Sequence> tuple(static_cast<std::size_t>(s.b - s.a));
    for (std::uint32_t m : s.chain) {
      const auto v = comparison_vertex(m, s.a, s.b);
      for (std::size_t f = 0; f < v.size(); ++f) tuple[f].push_back(v[f]);
    }
    return bfrak_cell(n, s.level, tuple);
  });
}

std::string describe_bfrak_key(int n, const HcKey& key) {
  std::string s = "objects (";
  for (int t = 0; t <= n; ++t) s += (t ? "," : "") + std::to_string(key[t]);
  s += ")";
  const HcShape& sh = hc_shape(n);
  for (std::size_t t = 0; t < sh.slots.size(); ++t) {
    const auto& slot = sh.slots[t];
    const auto tuple =
        bfrak_tuple(n, static_cast<int>(key[slot.a]), static_cast<int>(key[slot.b]), slot.level, key[n + 1 + t]);
    s += "; " + chain_string(slot.chain) + " -> " + tuple_string(tuple);
  }
  return s;
}

UniquenessResult uniqueness_search(int N) {
  if (N < 0) throw std::invalid_argument("uniqueness_search: negative degree");
  const int dim = std::max(N - 1, 0);
  UniquenessResult out;
  out.max_degree = N;
  std::vector<SimplicialCategory> cats;
  std::vector<std::vector<HcKey>> cands;
  for (int n = 0; n <= N; ++n) {
    cats.push_back(bfrak(n, dim));
    cands.push_back(hc_nerve(cats[n], n).keys[n]);
  }
  struct Alpha {
    int a, b;
    Sequence seq;
    SimplicialFunctor f;
  };
  std::vector<Alpha> alphas;
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b)
      for (std::uint64_t r = 0; r < monotone_count(a, b); ++r) {
        Sequence s = monotone_unrank(r, a, b);
        alphas.push_back({a, b, s, bfrak_map(s, a, b, dim)});
      }
  // g_b o C[alpha] == B[alpha] o g_a
  auto natural = [&](const Alpha& al, const HcKey& ga, const HcKey& gb) {
    const HcKey lhs = hc_apply(cats[al.b], al.b, gb, al.seq);
    const HcShape& sh = hc_shape(al.a);
    const std::size_t Na = static_cast<std::size_t>(al.a) + 1;
    HcKey rhs;
    for (int t = 0; t <= al.a; ++t) rhs.push_back(al.f.objects[ga[t]]);
    for (std::size_t t = 0; t < sh.slots.size(); ++t) {
      const auto& slot = sh.slots[t];
      rhs.push_back(al.f.homs[ga[slot.a] * Na + ga[slot.b]].levels[slot.level][ga[al.a + 1 + t]]);
    }
    return lhs == rhs;
  };
  std::vector<HcKey> family;
  auto search = [&](auto&& self, int n) -> void {
    if (n > N) {
      out.families.push_back(family);
      return;
    }
    std::size_t extensions = 0;
    for (const HcKey& g : cands[n]) {
      bool ok = true;
      for (const Alpha& al : alphas) {
        if (std::max(al.a, al.b) != n) continue;
        const HcKey& ga = al.a == n ? g : family[al.a];
        const HcKey& gb = al.b == n ? g : family[al.b];
        if (!natural(al, ga, gb)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++extensions;
      family.push_back(g);
      self(self, n + 1);
      family.pop_back();
    }
    if (extensions == 0) {
      std::string w = "g_" + std::to_string(n - 1) + ": " + describe_bfrak_key(n - 1, family.back()) + "; none of " +
                      std::to_string(cands[n].size()) + " functors C[Delta^" + std::to_string(n) +
                      "] -> B[Delta^" + std::to_string(n) + "] is natural";
      out.eliminated.push_back({family, n, std::move(w)});
    }
  };
  search(search, 0);
  return out;
}

// Symbolic comparison functor --------------------------------------------------------

namespace {

std::vector<Sequence> comparison_tuple(const std::vector<std::uint32_t>& chain, int i, int j) {
  std::vector<Sequence> tuple(static_cast<std::size_t>(j - i));
  for (std::uint32_t m : chain) {
    const auto v = comparison_vertex(m, i, j);
    for (std::size_t f = 0; f < v.size(); ++f) tuple[f].push_back(v[f]);
  }
  return tuple;
}

// B[alpha] on a tuple of hom(i, j) in B[Delta^m].
std::vector<Sequence> bfrak_push(const Sequence& alpha, int i, int j, const std::vector<Sequence>& tuple) {
  std::vector<Sequence> out;
  for (int t = j; t > i; --t) {
    Sequence s = tuple[j - t];
    for (int& v : s) v = alpha[v];
    for (int rep = 0; rep < alpha[t] - alpha[t - 1]; ++rep) out.push_back(s);
  }
  return out;
}

}  // namespace

CheckResult comparison_functor_check(int n_max) {
  CheckResult res("comparison functor");
  std::int64_t checked = 0;
  std::vector<FrakC> fcs;
  for (int n = 0; n <= n_max; ++n) fcs.push_back(frak_c(n, std::max(n, 1)));
  for (int n = 0; n <= n_max; ++n) {
    const FrakC& fc = fcs[n];
    const int D = fc.cat.dim;
    const std::string fn = "f_" + std::to_string(n);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = 0; k <= D; ++k)
          for (CellId cell = 0; cell < fc.cat.hom(i, j).size(k); ++cell) {
            ++checked;
            const auto ch = fc.chain(i, j, k, cell);
            const auto tuple = comparison_tuple(ch, i, j);
            const std::string where = fn + " on " + chain_string(ch);
            if (i == j && !tuple.empty()) res.fail(where + ": identity not preserved");
            for (const auto& s : tuple)
              if (!is_monotone(s) || s.front() < 0 || s.back() > n) res.fail(where + ": not a cell of Delta^n");
            for (int l = 0; k > 0 && l <= k; ++l) {
              auto dt = tuple;
              for (auto& s : dt) s = drop_entry(s, l);
              if (comparison_tuple(without(ch, l), i, j) != dt) res.fail(where + ": d_" + std::to_string(l));
            }
            for (int l = 0; k < D && l <= k; ++l) {
              auto st = tuple;
              for (auto& s : st) s = repeat_entry(s, l);
              auto sc = ch;
              sc.insert(sc.begin() + l, ch[l]);
              if (comparison_tuple(sc, i, j) != st) res.fail(where + ": s_" + std::to_string(l));
            }
          }
    // Composition: union of chains goes to the concatenated tuple.
    for (int i = 0; i <= n; ++i)
      for (int m = i + 1; m < n; ++m)
        for (int j = m + 1; j <= n; ++j)
          for (int k = 0; k <= D; ++k)
            for (CellId g = 0; g < fc.cat.hom(m, j).size(k); ++g)
              for (CellId f = 0; f < fc.cat.hom(i, m).size(k); ++f) {
                ++checked;
                const auto cg = fc.chain(m, j, k, g), cf = fc.chain(i, m, k, f);
                std::vector<std::uint32_t> un(cg.size());
                for (std::size_t t = 0; t < un.size(); ++t) un[t] = cg[t] | cf[t];
                auto cat = comparison_tuple(cg, m, j);
                const auto tf = comparison_tuple(cf, i, m);
                cat.insert(cat.end(), tf.begin(), tf.end());
                if (comparison_tuple(un, i, j) != cat)
                  res.fail(fn + ": composition at " + chain_string(cg) + " o " + chain_string(cf));
              }
  }
  // Naturality for every monotone alpha : [m] -> [n].
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (std::uint64_t r = 0; r < monotone_count(m, n); ++r) {
        const Sequence alpha = monotone_unrank(r, m, n);
        const FrakC& fc = fcs[m];
        for (int i = 0; i <= m; ++i)
          for (int j = i; j <= m; ++j)
            for (int k = 0; k <= fc.cat.dim; ++k)
              for (CellId cell = 0; cell < fc.cat.hom(i, j).size(k); ++cell) {
                ++checked;
                const auto ch = fc.chain(i, j, k, cell);
                std::vector<std::uint32_t> img;
                for (std::uint32_t s : ch) img.push_back(image_mask(s, alpha));
                if (comparison_tuple(img, alpha[i], alpha[j]) != bfrak_push(alpha, i, j, comparison_tuple(ch, i, j)))
                  res.fail("naturality for " + sequence_string(alpha) + " at " + chain_string(ch));
              }
      }
  if (res.witnesses.size() > 16) res.witnesses.resize(16);
  res.bounds = {{"n_max", n_max}, {"checked", checked}};
  return res;
}

}  // namespace nervekit
