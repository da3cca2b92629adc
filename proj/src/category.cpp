#include "nervekit/category.hpp"

#include <algorithm>
#include <bit>

namespace nervekit {

namespace {

std::string pair_ref(ObjId x, ObjId y) { return "hom(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::string cell_at(ObjId x, ObjId y, int n, CellId c) {
  return pair_ref(x, y) + " cell (" + std::to_string(n) + ", " + std::to_string(c) + ")";
}

}  // namespace

// Finite categories ---------------------------------------------------------

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport r;
  const std::size_t n = c.objects;
  if (c.hom_sizes.size() != n * n || c.id.size() != n || c.comp.size() != n * n * n) {
    r.add("shape", "category tables have the wrong size");
    return r;
  }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) {
        const auto& t = c.comp[(x * n + y) * n + z];
        if (t.size() != c.hom_size(y, z) * c.hom_size(x, y)) {
          r.add("shape", "composition table " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
          return r;
        }
        for (CellId m : t)
          if (m >= c.hom_size(x, z)) {
            r.add("range", "composite out of range in " + pair_ref(x, z));
            return r;
          }
      }
  for (ObjId x = 0; x < n; ++x)
    if (c.id[x] >= c.hom_size(x, x)) {
      r.add("range", "identity of object " + std::to_string(x));
      return r;
    }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (CellId f = 0; f < c.hom_size(x, y); ++f) {
        if (c.compose(x, y, y, c.id[y], f) != f) r.add("left unit", "morphism " + std::to_string(f) + " of " + pair_ref(x, y));
        if (c.compose(x, x, y, f, c.id[x]) != f) r.add("right unit", "morphism " + std::to_string(f) + " of " + pair_ref(x, y));
      }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        for (ObjId w = 0; w < n; ++w)
          for (CellId f = 0; f < c.hom_size(x, y); ++f)
            for (CellId g = 0; g < c.hom_size(y, z); ++g)
              for (CellId h = 0; h < c.hom_size(z, w); ++h)
                if (c.compose(x, z, w, h, c.compose(x, y, z, g, f)) != c.compose(x, y, w, c.compose(y, z, w, h, g), f))
                  r.add("associativity", "objects " + std::to_string(x) + "," + std::to_string(y) + "," +
                                             std::to_string(z) + "," + std::to_string(w) + " morphisms " +
                                             std::to_string(h) + "," + std::to_string(g) + "," + std::to_string(f));
  return r;
}

CellId CategoryNerve::find(const std::vector<CellId>& key) const {
  const std::size_t level = (key.size() - 1) / 2;
  auto it = index.at(level).find(key);
  if (it == index[level].end()) throw std::out_of_range("CategoryNerve: unknown chain");
  return it->second;
}

CategoryNerve nerve_cat(const FiniteCategory& c, int dim) {
  const auto n = static_cast<ObjId>(c.objects);
  KeyedCells<std::vector<CellId>> cells;
  cells.keys.resize(dim + 1);
  std::vector<CellId> key;
  auto extend = [&](auto&& self, int level) -> void {
    cells.keys[level].push_back(key);
    if (level == dim) return;
    const ObjId last = key.size() == 1 ? key[0] : key[key.size() - 2];
    for (ObjId y = 0; y < n; ++y)
      for (CellId f = 0; f < c.hom_size(last, y); ++f) {
        key.push_back(y);
        key.push_back(f);
        self(self, level + 1);
        key.pop_back();
        key.pop_back();
      }
  };
  for (ObjId x = 0; x < n; ++x) {
    key.assign(1, x);
    extend(extend, 0);
  }

  auto obj = [](const std::vector<CellId>& k, int t) { return t == 0 ? k[0] : k[2 * t - 1]; };
  auto face = [&](int level, int i, const std::vector<CellId>& k) {
    std::vector<CellId> out;
    if (i == 0) {
      out.push_back(k[1]);
      out.insert(out.end(), k.begin() + 3, k.end());
      return out;
    }
    if (i == level) return std::vector<CellId>(k.begin(), k.end() - 2);
    out.assign(k.begin(), k.begin() + 2 * i - 1);
    const CellId f = k[2 * i], g = k[2 * i + 2];
    out.push_back(k[2 * i + 1]);
    out.push_back(c.compose(obj(k, i - 1), obj(k, i), obj(k, i + 1), g, f));
    out.insert(out.end(), k.begin() + 2 * i + 3, k.end());
    return out;
  };
  auto degen = [&](int, int i, const std::vector<CellId>& k) {
    std::vector<CellId> out(k.begin(), k.begin() + 2 * i + 1);
    const ObjId x = obj(k, i);
    out.push_back(x);
    out.push_back(c.id[x]);
    out.insert(out.end(), k.begin() + 2 * i + 1, k.end());
    return out;
  };
  CategoryNerve result{SSet(dim), {}, {}};
  result.space = build_keyed(cells, face, degen);
  result.keys = std::move(cells.keys);
  result.index = std::move(cells.index);
  return result;
}

FiniteCategory poset_category(const FinitePoset& p) {
  FiniteCategory c;
  c.objects = p.size;
  const std::size_t n = p.size;
  c.hom_sizes.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) c.hom_sizes[x * n + y] = p.less_eq(x, y) ? 1 : 0;
  c.id.assign(n, 0);
  c.comp.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        c.comp[(x * n + y) * n + z].assign(c.hom_sizes[y * n + z] * c.hom_sizes[x * n + y], 0);
  return c;
}

// Simplicial categories -----------------------------------------------------

FiniteCategory level_category(const SimplicialCategory& c, int n) {
  if (n > c.dim) throw TruncationError("level_category: level above truncation");
  FiniteCategory out;
  const std::size_t N = c.objects();
  out.objects = N;
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) out.hom_sizes.push_back(c.hom(x, y).size(n));
  for (ObjId x = 0; x < N; ++x) out.id.push_back(c.identity(x, n));
  for (const auto& t : c.comp) out.comp.push_back(t[n]);
  return out;
}

SimplicialCategory discrete_simplicial(const FiniteCategory& c, int dim, std::vector<std::string> names) {
  SimplicialCategory out;
  const std::size_t N = c.objects;
  if (names.empty())
    for (std::size_t x = 0; x < N; ++x) names.push_back(std::to_string(x));
  out.names = std::move(names);
  out.dim = dim;
  for (std::size_t p = 0; p < N * N; ++p) {
    const std::size_t k = c.hom_sizes[p];
    std::vector<std::size_t> sizes(dim + 1, k);
    std::vector<CellId> ident(k);
    for (std::size_t t = 0; t < k; ++t) ident[t] = static_cast<CellId>(t);
    OperatorTables faces(dim + 1), degens(dim + 1);
    for (int n = 0; n <= dim; ++n) {
      if (n > 0) faces[n].assign(n + 1, ident);
      if (n < dim) degens[n].assign(n + 1, ident);
    }
    out.homs.emplace_back(std::move(sizes), std::move(faces), std::move(degens));
  }
  for (const auto& t : c.comp) out.comp.emplace_back(dim + 1, t);
  out.id = c.id;
  return out;
}

ValidationReport validate_simplicial_category(const SimplicialCategory& c) {
  ValidationReport r;
  const std::size_t N = c.objects();
  if (c.homs.size() != N * N || c.comp.size() != N * N * N || c.id.size() != N) {
    r.add("shape", "simplicial category tables have the wrong size");
    return r;
  }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const SSet& h = c.hom(x, y);
      if (h.dim() != c.dim) {
        r.add("shape", pair_ref(x, y) + " has truncation " + std::to_string(h.dim()));
        return r;
      }
      r.append(validate_sset(h), pair_ref(x, y) + " ");
    }
  if (!r.ok()) return r;
  for (ObjId x = 0; x < N; ++x)
    if (c.id[x] >= c.hom(x, x).size(0)) {
      r.add("range", "identity of object " + std::to_string(x));
      return r;
    }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      for (ObjId z = 0; z < N; ++z) {
        const auto& t = c.comp[(x * N + y) * N + z];
        if (static_cast<int>(t.size()) != c.dim + 1) {
          r.add("shape", "composition " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
          return r;
        }
        for (int n = 0; n <= c.dim; ++n) {
          if (t[n].size() != c.hom(y, z).size(n) * c.hom(x, y).size(n)) {
            r.add("shape", "composition " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                               " at level " + std::to_string(n));
            return r;
          }
          for (CellId m : t[n])
            if (m >= c.hom(x, z).size(n)) {
              r.add("range", "composite out of range in " + pair_ref(x, z));
              return r;
            }
        }
      }
  // Composition is simplicial.
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      for (ObjId z = 0; z < N; ++z) {
        const SSet &hf = c.hom(x, y), &hg = c.hom(y, z), &hc = c.hom(x, z);
        for (int n = 0; n <= c.dim; ++n)
          for (CellId g = 0; g < hg.size(n); ++g)
            for (CellId f = 0; f < hf.size(n); ++f) {
              const CellId gf = c.compose(x, y, z, n, g, f);
              for (int i = 0; n > 0 && i <= n; ++i)
                if (hc.face(n, i, gf) != c.compose(x, y, z, n - 1, hg.face(n, i, g), hf.face(n, i, f)))
                  r.add("composition/face", "d_" + std::to_string(i) + " on " + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + " level " +
                                                std::to_string(n) + " pair (" + std::to_string(g) + "," +
                                                std::to_string(f) + ")");
              for (int i = 0; n < c.dim && i <= n; ++i)
                if (hc.degen(n, i, gf) != c.compose(x, y, z, n + 1, hg.degen(n, i, g), hf.degen(n, i, f)))
                  r.add("composition/degeneracy", "s_" + std::to_string(i) + " on " + std::to_string(x) + "," +
                                                      std::to_string(y) + "," + std::to_string(z) + " level " +
                                                      std::to_string(n) + " pair (" + std::to_string(g) + "," +
                                                      std::to_string(f) + ")");
            }
      }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      for (int n = 0; n <= c.dim; ++n)
        for (CellId f = 0; f < c.hom(x, y).size(n); ++f) {
          if (c.compose(x, y, y, n, c.identity(y, n), f) != f) r.add("left unit", cell_at(x, y, n, f));
          if (c.compose(x, x, y, n, f, c.identity(x, n)) != f) r.add("right unit", cell_at(x, y, n, f));
        }
  for (int n = 0; n <= c.dim; ++n) {
    const FiniteCategory lc = level_category(c, n);
    for (const auto& v : validate_category(lc).violations)
      if (v.rule == "associativity") r.add(v.rule, "level " + std::to_string(n) + " " + v.witness);
  }
  return r;
}

RelativeSimplicialCategory whole(SimplicialCategory c) {
  RelativeSimplicialCategory r;
  for (const SSet& h : c.homs) {
    r.sub.emplace_back();
    for (int n = 0; n <= h.dim(); ++n) r.sub.back().emplace_back(h.size(n), 1);
  }
  r.cat = std::move(c);
  return r;
}

RelativeSimplicialCategory identities_only(SimplicialCategory c) {
  RelativeSimplicialCategory r;
  const std::size_t N = c.objects();
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const SSet& h = c.hom(x, y);
      r.sub.emplace_back();
      for (int n = 0; n <= h.dim(); ++n) {
        r.sub.back().emplace_back(h.size(n), 0);
        if (x == y) r.sub.back().back()[c.identity(x, n)] = 1;
      }
    }
  r.cat = std::move(c);
  return r;
}

RelativeSimplicialCategory components_of(SimplicialCategory c,
                                         const std::function<bool(ObjId, ObjId, CellId)>& vertex_in) {
  RelativeSimplicialCategory r;
  const std::size_t N = c.objects();
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const SSet& h = c.hom(x, y);
      const auto comp = vertex_components(h);
      std::vector<char> hit(h.size(0), 0);
      for (CellId v = 0; v < h.size(0); ++v)
        if (vertex_in(x, y, v) || (x == y && v == c.id[x])) hit[comp[v]] = 1;
      r.sub.emplace_back();
      for (int n = 0; n <= h.dim(); ++n) {
        r.sub.back().emplace_back(h.size(n), 0);
        for (CellId cell = 0; cell < h.size(n); ++cell)
          r.sub.back().back()[cell] = hit[comp[h.vertex(n, cell, 0)]];
      }
    }
  r.cat = std::move(c);
  return r;
}

ValidationReport validate_relative(const RelativeSimplicialCategory& rel) {
  ValidationReport r = validate_simplicial_category(rel.cat);
  if (!r.ok()) return r;
  const SimplicialCategory& c = rel.cat;
  const std::size_t N = c.objects();
  if (rel.sub.size() != N * N) {
    r.add("shape", "subcategory table has the wrong size");
    return r;
  }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const auto& s = rel.sub[x * N + y];
      const SSet& h = c.hom(x, y);
      bool shape_ok = static_cast<int>(s.size()) == c.dim + 1;
      for (int n = 0; shape_ok && n <= c.dim; ++n) shape_ok = s[n].size() == h.size(n);
      if (!shape_ok) {
        r.add("shape", "subcategory table of " + pair_ref(x, y));
        return r;
      }
    }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const SSet& h = c.hom(x, y);
      for (int n = 0; n <= c.dim; ++n)
        for (CellId cell = 0; cell < h.size(n); ++cell) {
          if (!rel.in_sub(x, y, n, cell)) continue;
          for (int i = 0; n > 0 && i <= n; ++i)
            if (!rel.in_sub(x, y, n - 1, h.face(n, i, cell)))
              r.add("subcategory/face", "d_" + std::to_string(i) + " of " + cell_at(x, y, n, cell));
          for (int i = 0; n < c.dim && i <= n; ++i)
            if (!rel.in_sub(x, y, n + 1, h.degen(n, i, cell)))
              r.add("subcategory/degeneracy", "s_" + std::to_string(i) + " of " + cell_at(x, y, n, cell));
        }
    }
  for (ObjId x = 0; x < N; ++x)
    if (!rel.in_sub(x, x, 0, c.id[x])) r.add("subcategory/identity", "identity of object " + std::to_string(x));
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      for (ObjId z = 0; z < N; ++z)
        for (int n = 0; n <= c.dim; ++n)
          for (CellId g = 0; g < c.hom(y, z).size(n); ++g) {
            if (!rel.in_sub(y, z, n, g)) continue;
            for (CellId f = 0; f < c.hom(x, y).size(n); ++f)
              if (rel.in_sub(x, y, n, f) && !rel.in_sub(x, z, n, c.compose(x, y, z, n, g, f)))
                r.add("subcategory/composition", "level " + std::to_string(n) + " composite of " +
                                                     std::to_string(g) + " in " + pair_ref(y, z) + " and " +
                                                     std::to_string(f) + " in " + pair_ref(x, y));
          }
  // Wideness: every component meeting the subcategory lies inside it.
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y) {
      const SSet& h = c.hom(x, y);
      const auto comp = vertex_components(h);
      std::vector<char> meets(h.size(0), 0), reported(h.size(0), 0);
      for (CellId v = 0; v < h.size(0); ++v)
        if (rel.in_sub(x, y, 0, v)) meets[comp[v]] = 1;
      for (int n = 0; n <= c.dim; ++n)
        for (CellId cell = 0; cell < h.size(n); ++cell) {
          const CellId k = comp[h.vertex(n, cell, 0)];
          if (meets[k] && !reported[k] && !rel.in_sub(x, y, n, cell)) {
            reported[k] = 1;
            r.add("wideness", cell_at(x, y, n, cell) + " lies in a component meeting the subcategory");
          }
        }
    }
  return r;
}

// Functors ------------------------------------------------------------------

ValidationReport validate_functor(const SimplicialCategory& src, const SimplicialCategory& tgt,
                                  const SimplicialFunctor& f) {
  ValidationReport r;
  const std::size_t N = src.objects(), M = tgt.objects();
  if (f.objects.size() != N || f.homs.size() != N * N) {
    r.add("shape", "functor tables have the wrong size");
    return r;
  }
  for (ObjId x = 0; x < N; ++x)
    if (f.objects[x] >= M) {
      r.add("range", "object " + std::to_string(x) + " maps out of range");
      return r;
    }
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      r.append(validate_map(src.hom(x, y), tgt.hom(f.objects[x], f.objects[y]), f.homs[x * N + y]),
               pair_ref(x, y) + " ");
  if (!r.ok()) return r;
  const int d = std::min(src.dim, tgt.dim);
  for (ObjId x = 0; x < N; ++x)
    if (f.homs[x * N + x].levels[0][src.id[x]] != tgt.id[f.objects[x]])
      r.add("functor/identity", "object " + std::to_string(x));
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      for (ObjId z = 0; z < N; ++z) {
        const auto &fxy = f.homs[x * N + y], &fyz = f.homs[y * N + z], &fxz = f.homs[x * N + z];
        const ObjId a = f.objects[x], b = f.objects[y], cc = f.objects[z];
        for (int n = 0; n <= d; ++n)
          for (CellId g = 0; g < src.hom(y, z).size(n); ++g)
            for (CellId h = 0; h < src.hom(x, y).size(n); ++h)
              if (fxz.levels[n][src.compose(x, y, z, n, g, h)] !=
                  tgt.compose(a, b, cc, n, fyz.levels[n][g], fxy.levels[n][h]))
                r.add("functor/composition", "objects " + std::to_string(x) + "," + std::to_string(y) + "," +
                                                 std::to_string(z) + " level " + std::to_string(n) + " pair (" +
                                                 std::to_string(g) + "," + std::to_string(h) + ")");
      }
  return r;
}

SimplicialFunctor compose(const SimplicialFunctor& g, const SimplicialFunctor& f) {
  SimplicialFunctor h;
  const std::size_t N = f.objects.size(), M = g.objects.size();
  for (ObjId x = 0; x < N; ++x) h.objects.push_back(g.objects[f.objects[x]]);
  for (ObjId x = 0; x < N; ++x)
    for (ObjId y = 0; y < N; ++y)
      h.homs.push_back(compose(g.homs[f.objects[x] * M + f.objects[y]], f.homs[x * N + y]));
  return h;
}

// Cosimplicial gadgets ---------------------------------------------------------

SimplicialCategory interval_power_cat(int n, const SSet& k) {
  SimplicialCategory c;
  const int N = n + 1;
  c.dim = k.dim();
  for (int x = 0; x < N; ++x) c.names.push_back(std::to_string(x));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) c.homs.push_back(i <= j ? power(k, j - i) : SSet(c.dim));
  c.comp.resize(static_cast<std::size_t>(N) * N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < N; ++l) {
        auto& t = c.comp[(i * N + j) * N + l];
        t.resize(c.dim + 1);
        if (!(i <= j && j <= l)) continue;
        // Concatenation of tuples is the identity on mixed-radix indices.
        for (int m = 0; m <= c.dim; ++m) {
          t[m].resize(c.hom(j, l).size(m) * c.hom(i, j).size(m));
          for (std::size_t q = 0; q < t[m].size(); ++q) t[m][q] = static_cast<CellId>(q);
        }
      }
  c.id.assign(N, 0);
  return c;
}

SimplicialCategory bfrak(int n, int dim) { return interval_power_cat(n, standard_simplex(n, dim)); }

std::vector<Sequence> bfrak_tuple(int n, int i, int j, int level, CellId c) {
  const std::uint64_t base = monotone_count(level, n);
  std::vector<Sequence> out(static_cast<std::size_t>(j - i));
  std::uint64_t rest = c;
  for (int t = j - i - 1; t >= 0; --t) {
    out[t] = monotone_unrank(rest % base, level, n);
    rest /= base;
  }
  return out;
}

CellId bfrak_cell(int n, int level, const std::vector<Sequence>& tuple) {
  const std::uint64_t base = monotone_count(level, n);
  std::uint64_t idx = 0;
  for (const auto& s : tuple) idx = idx * base + monotone_rank(s, n);
  return static_cast<CellId>(idx);
}

SimplicialFunctor bfrak_map(const Sequence& alpha, int m, int n, int dim) {
  SimplicialFunctor f;
  const int N = m + 1;
  for (int x = 0; x < N; ++x) f.objects.push_back(static_cast<ObjId>(alpha[x]));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      SimplicialMap map;
      for (int k = 0; k <= dim; ++k) {
        map.levels.emplace_back();
        if (i > j) continue;
        std::uint64_t count = 1;
        for (int t = i; t < j; ++t) count *= monotone_count(k, m);
        auto& level = map.levels.back();
        level.resize(count);
        for (std::uint64_t c = 0; c < count; ++c) {
          const auto tuple = bfrak_tuple(m, i, j, k, static_cast<CellId>(c));
          std::vector<Sequence> image;
          for (int t = j; t > i; --t) {
            Sequence s = tuple[j - t];
            for (int& v : s) v = alpha[v];
            for (int rep = 0; rep < alpha[t] - alpha[t - 1]; ++rep) image.push_back(s);
          }
          level[c] = bfrak_cell(n, k, image);
        }
      }
      f.homs.push_back(std::move(map));
    }
  return f;
}

std::uint32_t image_mask(std::uint32_t s, const Sequence& alpha) {
  std::uint32_t out = 0;
  for (int t = 0; t < static_cast<int>(alpha.size()); ++t)
    if (s & (1u << t)) out |= 1u << alpha[t];
  return out;
}

std::string mask_string(std::uint32_t s) {
  std::string out = "{";
  bool first = true;
  for (int t = 0; t < 32; ++t)
    if (s & (1u << t)) {
      if (!first) out += ",";
      out += std::to_string(t);
      first = false;
    }
  return out + "}";
}

std::vector<std::uint32_t> FrakC::chain(int i, int j, int level, CellId c) const {
  const auto& els = poset(i, j);
  std::vector<std::uint32_t> out;
  for (int e : nerve(i, j).chains[level][c]) out.push_back(els[e]);
  return out;
}

CellId FrakC::cell(int i, int j, const std::vector<std::uint32_t>& masks) const {
  const auto& els = poset(i, j);
  std::vector<int> idx;
  for (std::uint32_t m : masks) {
    auto it = std::lower_bound(els.begin(), els.end(), m);
    if (it == els.end() || *it != m) throw std::out_of_range("FrakC: " + mask_string(m) + " is not in the poset");
    idx.push_back(static_cast<int>(it - els.begin()));
  }
  return nerve(i, j).find(idx);
}

FrakC frak_c(int n, int dim) {
  FrakC out;
  out.n = n;
  const int N = n + 1;
  SimplicialCategory& c = out.cat;
  c.dim = dim;
  for (int x = 0; x < N; ++x) c.names.push_back(std::to_string(x));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<std::uint32_t> els;
      if (i <= j) {
        const std::uint32_t ends = (1u << i) | (1u << j);
        const int inner = j > i ? j - i - 1 : 0;
        for (std::uint32_t bits = 0; bits < (1u << inner); ++bits) els.push_back(ends | (bits << (i + 1)));
        std::sort(els.begin(), els.end());
      }
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = 0; b < els.size(); ++b)
          if ((els[a] & els[b]) == els[a]) rel.emplace_back(a, b);
      out.nerves.push_back(poset_nerve(FinitePoset::from_relations(els.size(), rel), dim));
      out.elements.push_back(std::move(els));
      c.homs.push_back(out.nerves.back().space);
    }
  c.comp.resize(static_cast<std::size_t>(N) * N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < N; ++l) {
        auto& t = c.comp[(i * N + j) * N + l];
        t.resize(dim + 1);
        if (!(i <= j && j <= l)) continue;
        for (int k = 0; k <= dim; ++k) {
          const std::size_t nf = c.hom(i, j).size(k), ng = c.hom(j, l).size(k);
          t[k].resize(ng * nf);
          for (CellId g = 0; g < ng; ++g)
            for (CellId f = 0; f < nf; ++f) {
              auto a = out.chain(j, l, k, g), b = out.chain(i, j, k, f);
              for (std::size_t s = 0; s < a.size(); ++s) a[s] |= b[s];
              t[k][g * nf + f] = out.cell(i, l, a);
            }
        }
      }
  c.id.assign(N, 0);
  return out;
}

SimplicialFunctor frak_c_map(const Sequence& alpha, const FrakC& src, const FrakC& tgt) {
  SimplicialFunctor f;
  const int N = src.n + 1;
  const int d = std::min(src.cat.dim, tgt.cat.dim);
  for (int x = 0; x < N; ++x) f.objects.push_back(static_cast<ObjId>(alpha[x]));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      SimplicialMap map;
      for (int k = 0; k <= d; ++k) {
        map.levels.emplace_back(src.cat.hom(i, j).size(k));
        for (CellId c = 0; c < map.levels[k].size(); ++c) {
          auto ch = src.chain(i, j, k, c);
          for (auto& s : ch) s = image_mask(s, alpha);
          map.levels[k][c] = tgt.cell(alpha[i], alpha[j], ch);
        }
      }
      f.homs.push_back(std::move(map));
    }
  return f;
}

std::vector<int> comparison_vertex(std::uint32_t s, int i, int j) {
  std::vector<int> out;
  for (int p = j; p > i; --p) {
    int best = -1;
    for (int t = 0; t < p; ++t)
      if (s & (1u << t)) best = t;
    out.push_back(best);
  }
  return out;
}

SimplicialFunctor comparison_functor(const FrakC& c, const SimplicialCategory& b) {
  SimplicialFunctor f;
  const int n = c.n, N = n + 1;
  const int d = std::min(c.cat.dim, b.dim);
  for (int x = 0; x < N; ++x) f.objects.push_back(static_cast<ObjId>(x));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      SimplicialMap map;
      for (int k = 0; k <= d; ++k) {
        map.levels.emplace_back(c.cat.hom(i, j).size(k));
        for (CellId cell = 0; cell < map.levels[k].size(); ++cell) {
          const auto ch = c.chain(i, j, k, cell);
          std::vector<Sequence> tuple(static_cast<std::size_t>(j - i), Sequence(ch.size()));
          for (std::size_t t = 0; t < ch.size(); ++t) {
            const auto v = comparison_vertex(ch[t], i, j);
            for (std::size_t p = 0; p < v.size(); ++p) tuple[p][t] = v[p];
          }
          map.levels[k][cell] = bfrak_cell(n, k, tuple);
        }
      }
      f.homs.push_back(std::move(map));
    }
  return f;
}

}  // namespace nervekit
