#include "nervekit/sset.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace nervekit {

namespace {

std::string cell_ref(int n, CellId c) {
  return "(" + std::to_string(n) + ", " + std::to_string(c) + ")";
}

}  // namespace

// SSet ----------------------------------------------------------------------

SSet::SSet(int dim) {
  if (dim < 0) throw std::invalid_argument("SSet: negative dimension");
  sizes_.assign(static_cast<std::size_t>(dim) + 1, 0);
  faces_.resize(sizes_.size());
  degens_.resize(sizes_.size());
  for (int n = 0; n <= dim; ++n) {
    if (n > 0) faces_[n].assign(n + 1, {});
    if (n < dim) degens_[n].assign(n + 1, {});
  }
  degenerate_.assign(sizes_.size(), {});
}

SSet::SSet(std::vector<std::size_t> sizes, OperatorTables faces, OperatorTables degens)
    : sizes_(std::move(sizes)), faces_(std::move(faces)), degens_(std::move(degens)) {
  if (sizes_.empty()) throw std::invalid_argument("SSet: no levels");
  const int d = dim();
  if (faces_.size() != sizes_.size() || degens_.size() != sizes_.size())
    throw std::invalid_argument("SSet: operator tables do not match level count");
  for (int n = 0; n <= d; ++n) {
    const std::size_t nf = n > 0 ? static_cast<std::size_t>(n) + 1 : 0;
    const std::size_t nd = n < d ? static_cast<std::size_t>(n) + 1 : 0;
    if (faces_[n].size() != nf) throw std::invalid_argument("SSet: wrong number of face maps at level " + std::to_string(n));
    if (degens_[n].size() != nd) throw std::invalid_argument("SSet: wrong number of degeneracies at level " + std::to_string(n));
    for (const auto& t : faces_[n])
      if (t.size() != sizes_[n]) throw std::invalid_argument("SSet: face table length mismatch at level " + std::to_string(n));
    for (const auto& t : degens_[n])
      if (t.size() != sizes_[n]) throw std::invalid_argument("SSet: degeneracy table length mismatch at level " + std::to_string(n));
  }
  degenerate_.assign(sizes_.size(), {});
  for (int n = 0; n <= d; ++n) degenerate_[n].assign(sizes_[n], 0);
  for (int n = 0; n < d; ++n)
    for (const auto& t : degens_[n])
      for (CellId c : t)
        if (c < sizes_[n + 1]) degenerate_[n + 1][c] = 1;
}

std::size_t SSet::total_cells() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

std::vector<CellId> SSet::nondegenerate(int n) const {
  std::vector<CellId> out;
  for (CellId c = 0; c < sizes_[n]; ++c)
    if (!degenerate_[n][c]) out.push_back(c);
  return out;
}

std::vector<std::size_t> SSet::nondegenerate_counts() const {
  std::vector<std::size_t> out;
  for (int n = 0; n <= dim(); ++n)
    out.push_back(static_cast<std::size_t>(std::count(degenerate_[n].begin(), degenerate_[n].end(), 0)));
  return out;
}

CellId SSet::vertex(int n, CellId c, int k) const {
  const int seq[1] = {k};
  return apply(n, c, seq);
}

CellId SSet::apply(int n, CellId c, std::span<const int> seq) const {
  const int m = static_cast<int>(seq.size()) - 1;
  if (m > dim()) throw TruncationError("apply: target level " + std::to_string(m) + " above truncation");
  if (n > 63) throw TruncationError("apply: level " + std::to_string(n) + " too large");
  std::uint64_t hit = 0;
  for (int v : seq) {
    if (v < 0 || v > n) throw std::out_of_range("apply: sequence value " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
    hit |= std::uint64_t{1} << v;
  }
  int level = n;
  for (int j = n; j >= 0; --j) {
    if (!(hit >> j & 1)) c = faces_[level--][j][c];
  }
  for (int t = 1; t <= m; ++t) {
    if (seq[t] == seq[t - 1]) {
      c = degens_[level][t - 1][c];
      ++level;
    }
  }
  return c;
}

CellId SSet::degenerate_up(int n, CellId c, int times) const {
  for (int t = 0; t < times; ++t) c = degens_[n + t][0][c];
  return c;
}

EzDecomposition ez_decompose(const SSet& x, int n, CellId c) {
  Sequence seq(static_cast<std::size_t>(n) + 1);
  std::iota(seq.begin(), seq.end(), 0);
  int level = n;
  // seq maps [n] onto [level]; each step peels one s_i off the current cell.
  while (level > 0 && x.degenerate(level, c)) {
    int found = -1;
    for (int i = 0; i < level; ++i) {
      const CellId y = x.face(level, i, c);
      if (x.degen(level - 1, i, y) == c) {
        found = i;
        c = y;
        break;
      }
    }
    if (found < 0) throw std::logic_error("ez_decompose: degenerate cell without a witness");
    for (int& v : seq)
      if (v > found) --v;
    --level;
  }
  return {level, c, std::move(seq)};
}

std::vector<CellId> vertex_components(const SSet& x) {
  std::vector<CellId> parent(x.size(0));
  std::iota(parent.begin(), parent.end(), CellId{0});
  auto find = [&](CellId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (x.dim() >= 1)
    for (CellId e = 0; e < x.size(1); ++e) {
      CellId a = find(x.face(1, 0, e)), b = find(x.face(1, 1, e));
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }
  for (CellId v = 0; v < parent.size(); ++v) parent[v] = find(v);
  return parent;
}

// Posets --------------------------------------------------------------------

FinitePoset FinitePoset::chain(std::size_t n) {
  FinitePoset p{n, std::vector<char>(n * n, 0)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) p.leq[a * n + b] = 1;
  return p;
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  FinitePoset p{n, std::vector<char>(n * n, 0)};
  for (std::size_t a = 0; a < n; ++a) p.leq[a * n + a] = 1;
  return p;
}

FinitePoset FinitePoset::from_relations(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  FinitePoset p = antichain(n);
  for (auto [a, b] : rel) {
    if (a >= n || b >= n) throw std::invalid_argument("poset relation out of range");
    p.leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (p.leq[k * n + b]) p.leq[a * n + b] = 1;
  return p;
}

ValidationReport validate_poset(const FinitePoset& p) {
  ValidationReport r;
  if (p.leq.size() != p.size * p.size) {
    r.add("shape", "relation table has " + std::to_string(p.leq.size()) + " entries");
    return r;
  }
  for (std::size_t a = 0; a < p.size; ++a) {
    if (!p.less_eq(a, a)) r.add("reflexive", "element " + std::to_string(a));
    for (std::size_t b = a + 1; b < p.size; ++b)
      if (p.less_eq(a, b) && p.less_eq(b, a))
        r.add("antisymmetric", "elements " + std::to_string(a) + ", " + std::to_string(b));
    for (std::size_t b = 0; b < p.size; ++b)
      for (std::size_t c = 0; c < p.size; ++c)
        if (p.less_eq(a, b) && p.less_eq(b, c) && !p.less_eq(a, c))
          r.add("transitive", std::to_string(a) + " <= " + std::to_string(b) + " <= " + std::to_string(c));
  }
  return r;
}

CellId PosetNerve::find(const std::vector<int>& chain) const {
  const auto& idx = index.at(chain.size() - 1);
  auto it = idx.find(chain);
  if (it == idx.end()) throw std::out_of_range("PosetNerve: not a chain " + sequence_string(chain));
  return it->second;
}

// Builders ------------------------------------------------------------------


SSet standard_simplex(int n, int dim) {
  if (n < 0 || dim < 0) throw std::invalid_argument("standard_simplex: negative argument");
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= dim; ++k) sizes.push_back(monotone_count(k, n));
  OperatorTables faces(dim + 1), degens(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    if (k > 0) faces[k].assign(k + 1, std::vector<CellId>(sizes[k]));
    if (k < dim) degens[k].assign(k + 1, std::vector<CellId>(sizes[k]));
    for (std::size_t c = 0; c < sizes[k]; ++c) {
      const Sequence s = monotone_unrank(c, k, n);
      for (int i = 0; k > 0 && i <= k; ++i)
        faces[k][i][c] = static_cast<CellId>(monotone_rank(drop_entry(s, i), n));
      for (int i = 0; k < dim && i <= k; ++i)
        degens[k][i][c] = static_cast<CellId>(monotone_rank(repeat_entry(s, i), n));
    }
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

SSet point(int dim) { return standard_simplex(0, dim); }

SSet product(const SSet& x, const SSet& y) {
  const int d = std::min(x.dim(), y.dim());
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= d; ++n) sizes.push_back(x.size(n) * y.size(n));
  OperatorTables faces(d + 1), degens(d + 1);
  for (int n = 0; n <= d; ++n) {
    const std::size_t ny = y.size(n);
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<CellId>(sizes[n]));
      const std::size_t my = y.size(n - 1);
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < sizes[n]; ++c)
          faces[n][i][c] = static_cast<CellId>(x.face(n, i, static_cast<CellId>(c / ny)) * my +
                                                y.face(n, i, static_cast<CellId>(c % ny)));
    }
    if (n < d) {
      degens[n].assign(n + 1, std::vector<CellId>(sizes[n]));
      const std::size_t my = y.size(n + 1);
      for (int i = 0; i <= n; ++i)
        for (std::size_t c = 0; c < sizes[n]; ++c)
          degens[n][i][c] = static_cast<CellId>(x.degen(n, i, static_cast<CellId>(c / ny)) * my +
                                                 y.degen(n, i, static_cast<CellId>(c % ny)));
    }
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

SSet power(const SSet& k, int m) {
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  if (m == 0) return point(k.dim());
  SSet acc = k;
  for (int t = 1; t < m; ++t) acc = product(k, acc);
  return acc;
}

SSet disjoint_union(const SSet& x, const SSet& y) {
  const int d = std::min(x.dim(), y.dim());
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= d; ++n) sizes.push_back(x.size(n) + y.size(n));
  OperatorTables faces(d + 1), degens(d + 1);
  for (int n = 0; n <= d; ++n) {
    if (n > 0) {
      faces[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        auto& t = faces[n][i];
        t = x.face_tables()[n][i];
        for (CellId c : y.face_tables()[n][i]) t.push_back(c + static_cast<CellId>(x.size(n - 1)));
      }
    }
    if (n < d) {
      degens[n].resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        auto& t = degens[n][i];
        t = x.degen_tables()[n][i];
        for (CellId c : y.degen_tables()[n][i]) t.push_back(c + static_cast<CellId>(x.size(n + 1)));
      }
    }
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

SSet truncate(const SSet& x, int dim) {
  if (dim > x.dim()) throw TruncationError("truncate: requested level above source truncation");
  std::vector<std::size_t> sizes(x.sizes().begin(), x.sizes().begin() + dim + 1);
  OperatorTables faces(x.face_tables().begin(), x.face_tables().begin() + dim + 1);
  OperatorTables degens(x.degen_tables().begin(), x.degen_tables().begin() + dim + 1);
  degens[dim].clear();
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

PosetNerve poset_nerve(const FinitePoset& poset, int dim) {
  KeyedCells<std::vector<int>> cells;
  cells.keys.resize(dim + 1);
  const int n = static_cast<int>(poset.size);
  std::vector<int> cur;
  // Chains in lexicographic order of element indices.
  auto extend = [&](auto&& self, int len) -> void {
    if (static_cast<int>(cur.size()) == len) {
      cells.keys[len - 1].push_back(cur);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (!cur.empty() && !poset.less_eq(static_cast<std::size_t>(cur.back()), static_cast<std::size_t>(e))) continue;
      cur.push_back(e);
      self(self, len);
      cur.pop_back();
    }
  };
  for (int k = 0; k <= dim; ++k) extend(extend, k + 1);
  PosetNerve out{SSet(dim), {}, {}};
  out.space = build_keyed(
      cells, [](int, int i, const std::vector<int>& s) { return drop_entry(s, i); },
      [](int, int i, const std::vector<int>& s) { return repeat_entry(s, i); });
  out.chains = std::move(cells.keys);
  out.index = std::move(cells.index);
  return out;
}

SSet simplex_subcomplex(int n, int dim, const std::function<bool(std::uint32_t)>& keep) {
  KeyedCells<Sequence> cells;
  cells.keys.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const std::uint64_t total = monotone_count(k, n);
    for (std::uint64_t r = 0; r < total; ++r) {
      Sequence s = monotone_unrank(r, k, n);
      std::uint32_t mask = 0;
      for (int v : s) mask |= 1u << v;
      if (keep(mask)) cells.keys[k].push_back(std::move(s));
    }
  }
  return build_keyed(
      cells, [](int, int i, const Sequence& s) { return drop_entry(s, i); },
      [](int, int i, const Sequence& s) { return repeat_entry(s, i); });
}

SSet boundary_simplex(int n, int dim) {
  const std::uint32_t full = (1u << (n + 1)) - 1;
  return simplex_subcomplex(n, dim, [full](std::uint32_t m) { return m != full; });
}

SSet horn(int n, int k, int dim) {
  if (k < 0 || k > n) throw std::invalid_argument("horn: k out of range");
  const std::uint32_t full = (1u << (n + 1)) - 1;
  return simplex_subcomplex(n, dim, [full, k](std::uint32_t m) { return (m | (1u << k)) != full; });
}

// Maps ----------------------------------------------------------------------

SimplicialMap identity_map(const SSet& x) {
  SimplicialMap f;
  for (int n = 0; n <= x.dim(); ++n) {
    f.levels.emplace_back(x.size(n));
    std::iota(f.levels.back().begin(), f.levels.back().end(), CellId{0});
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h;
  const std::size_t levels = std::min(g.levels.size(), f.levels.size());
  for (std::size_t n = 0; n < levels; ++n) {
    h.levels.emplace_back(f.levels[n].size());
    for (std::size_t c = 0; c < f.levels[n].size(); ++c) h.levels[n][c] = g.levels[n][f.levels[n][c]];
  }
  return h;
}

SimplicialMap projection_first(const SSet& x, const SSet& y) {
  SimplicialMap f;
  for (int n = 0; n <= std::min(x.dim(), y.dim()); ++n) {
    f.levels.emplace_back(x.size(n) * y.size(n));
    for (std::size_t c = 0; c < f.levels[n].size(); ++c) f.levels[n][c] = static_cast<CellId>(c / y.size(n));
  }
  return f;
}

SimplicialMap projection_second(const SSet& x, const SSet& y) {
  SimplicialMap f;
  for (int n = 0; n <= std::min(x.dim(), y.dim()); ++n) {
    f.levels.emplace_back(x.size(n) * y.size(n));
    for (std::size_t c = 0; c < f.levels[n].size(); ++c) f.levels[n][c] = static_cast<CellId>(c % y.size(n));
  }
  return f;
}

ValidationReport validate_map(const SSet& src, const SSet& tgt, const SimplicialMap& f) {
  ValidationReport r;
  const int d = std::min(src.dim(), tgt.dim());
  if (static_cast<int>(f.levels.size()) != d + 1) {
    r.add("shape", "map has " + std::to_string(f.levels.size()) + " levels, expected " + std::to_string(d + 1));
    return r;
  }
  for (int n = 0; n <= d; ++n) {
    if (f.levels[n].size() != src.size(n)) {
      r.add("shape", "level " + std::to_string(n) + " has wrong length");
      return r;
    }
    for (CellId c = 0; c < src.size(n); ++c)
      if (f.levels[n][c] >= tgt.size(n)) {
        r.add("range", "image of " + cell_ref(n, c) + " out of range");
        return r;
      }
  }
  for (int n = 0; n <= d; ++n)
    for (CellId c = 0; c < src.size(n); ++c) {
      for (int i = 0; n > 0 && i <= n; ++i)
        if (f.levels[n - 1][src.face(n, i, c)] != tgt.face(n, i, f.levels[n][c]))
          r.add("face", "d_" + std::to_string(i) + " at " + cell_ref(n, c));
      for (int i = 0; n < d && i <= n; ++i)
        if (f.levels[n + 1][src.degen(n, i, c)] != tgt.degen(n, i, f.levels[n][c]))
          r.add("degeneracy", "s_" + std::to_string(i) + " at " + cell_ref(n, c));
    }
  return r;
}

// Validation ----------------------------------------------------------------

ValidationReport validate_sset(const SSet& x) {
  ValidationReport r;
  const int d = x.dim();
  for (int n = 0; n <= d; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i)
      for (CellId c = 0; c < x.size(n); ++c)
        if (x.face(n, i, c) >= x.size(n - 1))
          r.add("range", "d_" + std::to_string(i) + " of " + cell_ref(n, c));
    for (int i = 0; n < d && i <= n; ++i)
      for (CellId c = 0; c < x.size(n); ++c)
        if (x.degen(n, i, c) >= x.size(n + 1))
          r.add("range", "s_" + std::to_string(i) + " of " + cell_ref(n, c));
  }
  if (!r.ok()) return r;

  auto name = [](const char* op, int i) { return std::string(op) + "_" + std::to_string(i); };
  for (int n = 0; n <= d; ++n) {
    for (CellId c = 0; c < x.size(n); ++c) {
      // d_i d_j = d_{j-1} d_i, i < j
      for (int j = 1; n >= 2 && j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, i, x.face(n, j, c)) != x.face(n - 1, j - 1, x.face(n, i, c)))
            r.add(name("d", i) + " " + name("d", j) + " = " + name("d", j - 1) + " " + name("d", i), cell_ref(n, c));
      // s_i s_j = s_{j+1} s_i, i <= j
      for (int j = 0; n + 2 <= d && j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (x.degen(n + 1, i, x.degen(n, j, c)) != x.degen(n + 1, j + 1, x.degen(n, i, c)))
            r.add(name("s", i) + " " + name("s", j) + " = " + name("s", j + 1) + " " + name("s", i), cell_ref(n, c));
      // d_i s_j
      for (int j = 0; n < d && j <= n; ++j) {
        const CellId sc = x.degen(n, j, c);
        for (int i = 0; i <= n + 1; ++i) {
          const CellId lhs = x.face(n + 1, i, sc);
          std::string rule;
          bool ok = true;
          if (i == j || i == j + 1) {
            ok = lhs == c;
            rule = name("d", i) + " " + name("s", j) + " = id";
          } else if (i < j) {
            ok = lhs == x.degen(n - 1, j - 1, x.face(n, i, c));
            rule = name("d", i) + " " + name("s", j) + " = " + name("s", j - 1) + " " + name("d", i);
          } else {
            ok = lhs == x.degen(n - 1, j, x.face(n, i - 1, c));
            rule = name("d", i) + " " + name("s", j) + " = " + name("s", j) + " " + name("d", i - 1);
          }
          if (!ok) r.add(rule, cell_ref(n, c));
        }
      }
    }
  }
  return r;
}

ValidationReport validate_marked(const MarkedSSet& x) {
  ValidationReport r = validate_sset(x.space);
  if (x.space.dim() < 1) {
    if (!x.marked.empty()) r.add("marking", "marked edges on a 0-truncated space");
    return r;
  }
  if (x.marked.size() != x.space.size(1)) {
    r.add("marking", "marking table has wrong length");
    return r;
  }
  for (CellId v = 0; v < x.space.size(0); ++v)
    if (!x.marked[x.space.degen(0, 0, v)])
      r.add("marking", "degenerate edge s_0" + cell_ref(0, v) + " not marked");
  return r;
}

// Enumeration ---------------------------------------------------------------

FaceIndex::FaceIndex(const SSet& x) : x_(&x) {
  vertices_.resize(x.size(0));
  std::iota(vertices_.begin(), vertices_.end(), CellId{0});
  by_faces_.resize(static_cast<std::size_t>(x.dim()) + 1);
  std::vector<CellId> key;
  for (int n = 1; n <= x.dim(); ++n)
    for (CellId c = 0; c < x.size(n); ++c) {
      key.clear();
      for (int i = 0; i <= n; ++i) key.push_back(x.face(n, i, c));
      by_faces_[n][key].push_back(c);
    }
}

const std::vector<CellId>& FaceIndex::candidates(int n, const std::vector<CellId>& faces) const {
  if (n == 0) return vertices_;
  if (n > x_->dim()) return none_;
  auto it = by_faces_[n].find(faces);
  return it == by_faces_[n].end() ? none_ : it->second;
}

namespace {

struct MapSearch {
  const SSet& a;
  const FaceIndex& fx;
  const MapSearchOptions& opts;
  std::vector<std::vector<CellId>> nondeg;                     // [level]
  std::vector<std::vector<std::pair<int, CellId>>> witness;    // degenerate a = s_k b
  SimplicialMap cur;
  std::vector<CellId> key;

  MapSearch(const SSet& a_, const FaceIndex& fx_, const MapSearchOptions& o) : a(a_), fx(fx_), opts(o) {
    const int d = a.dim();
    nondeg.resize(d + 1);
    witness.resize(d + 1);
    cur.levels.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
      cur.levels[n].assign(a.size(n), 0);
      witness[n].assign(a.size(n), {-1, 0});
      for (CellId c = 0; c < a.size(n); ++c) {
        if (!a.degenerate(n, c)) {
          nondeg[n].push_back(c);
          continue;
        }
        for (int k = 0; k < n; ++k) {
          const CellId b = a.face(n, k, c);
          if (a.degen(n - 1, k, b) == c) {
            witness[n][c] = {k, b};
            break;
          }
        }
      }
    }
  }

  const std::vector<CellId>& options(int n, CellId c) {
    key.clear();
    for (int i = 0; n > 0 && i <= n; ++i) key.push_back(cur.levels[n - 1][a.face(n, i, c)]);
    return fx.candidates(n, key);
  }

  bool fill_degenerate(int n) {
    const SSet& x = fx.space();
    for (CellId c = 0; c < a.size(n); ++c) {
      auto [k, b] = witness[n][c];
      if (k < 0) continue;
      const CellId img = x.degen(n - 1, k, cur.levels[n - 1][b]);
      if (opts.allow && !opts.allow(n, c, img)) return false;
      cur.levels[n][c] = img;
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  template <class Visit>
  bool run(int n, std::size_t pos, Visit&& visit) {
    const int d = a.dim();
    if (n > d) return visit(cur);
    if (pos == 0 && n > 0 && !fill_degenerate(n)) return true;
    if (pos == nondeg[n].size()) return run(n + 1, 0, visit);
    const CellId c = nondeg[n][pos];
    const std::vector<CellId> opts_here = options(n, c);
    for (CellId xcell : opts_here) {
      if (opts.allow && !opts.allow(n, c, xcell)) continue;
      cur.levels[n][c] = xcell;
      if (!run(n, pos + 1, visit)) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_map(const SSet& a, const FaceIndex& x, const MapSearchOptions& opts,
                  const std::function<bool(const SimplicialMap&)>& visit) {
  if (a.dim() > x.space().dim())
    throw TruncationError("enumerate_maps: source truncation exceeds target truncation");
  MapSearch root(a, x, opts);
  if (opts.jobs <= 1 || root.nondeg[0].empty() || x.space().size(0) < 2) {
    root.run(0, 0, [&](const SimplicialMap& m) { return visit(m); });
    return;
  }
  // Split on the image of the first vertex; merge in candidate order.
  const CellId first = root.nondeg[0][0];
  std::vector<std::future<std::vector<SimplicialMap>>> parts;
  for (CellId v = 0; v < x.space().size(0); ++v) {
    parts.push_back(std::async(std::launch::async, [&, v] {
      std::vector<SimplicialMap> found;
      if (opts.allow && !opts.allow(0, first, v)) return found;
      MapSearch local(a, x, opts);
      local.cur.levels[0][first] = v;
      local.run(0, 1, [&](const SimplicialMap& m) {
        found.push_back(m);
        return true;
      });
      return found;
    }));
  }
  bool go = true;
  for (auto& p : parts) {
    auto found = p.get();
    for (const auto& m : found) {
      if (!go) break;
      go = visit(m);
    }
  }
}

std::vector<SimplicialMap> enumerate_maps(const SSet& a, const SSet& x, const MapSearchOptions& opts) {
  FaceIndex fx(x);
  std::vector<SimplicialMap> out;
  for_each_map(a, fx, opts, [&](const SimplicialMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace nervekit
