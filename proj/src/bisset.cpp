#include "nervekit/bisset.hpp"

#include <algorithm>

namespace nervekit {

namespace {

std::string bicell(int p, int q, CellId c) {
  return "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(c) + ")";
}

}  // namespace

BisimplicialSet BisimplicialSet::with_sizes(std::vector<std::vector<std::size_t>> sizes) {
  BisimplicialSet x;
  x.P = static_cast<int>(sizes.size()) - 1;
  x.Q = static_cast<int>(sizes.at(0).size()) - 1;
  x.sizes = std::move(sizes);
  auto shape = [&](BiOperatorTables& t, bool horizontal, bool face) {
    t.assign(x.P + 1, std::vector<std::vector<std::vector<CellId>>>(x.Q + 1));
    for (int p = 0; p <= x.P; ++p)
      for (int q = 0; q <= x.Q; ++q) {
        const int n = horizontal ? p : q;
        const int top = horizontal ? x.P : x.Q;
        const bool present = face ? n > 0 : n < top;
        if (present) t[p][q].assign(n + 1, std::vector<CellId>(x.sizes[p][q], 0));
      }
  };
  shape(x.hface, true, true);
  shape(x.hdegen, true, false);
  shape(x.vface, false, true);
  shape(x.vdegen, false, false);
  return x;
}

SSet row(const BisimplicialSet& x, int q) {
  std::vector<std::size_t> sizes;
  OperatorTables faces, degens;
  for (int p = 0; p <= x.P; ++p) {
    sizes.push_back(x.sizes[p][q]);
    faces.push_back(x.hface[p][q]);
    degens.push_back(x.hdegen[p][q]);
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

SSet column(const BisimplicialSet& x, int p) {
  return SSet(x.sizes[p], x.vface[p], x.vdegen[p]);
}

SSet diagonal(const BisimplicialSet& x) {
  const int d = std::min(x.P, x.Q);
  std::vector<std::size_t> sizes;
  OperatorTables faces(d + 1), degens(d + 1);
  for (int k = 0; k <= d; ++k) {
    sizes.push_back(x.sizes[k][k]);
    if (k > 0) {
      faces[k].assign(k + 1, std::vector<CellId>(sizes[k]));
      for (int i = 0; i <= k; ++i)
        for (CellId c = 0; c < sizes[k]; ++c) faces[k][i][c] = x.hface[k][k - 1][i][x.vface[k][k][i][c]];
    }
    if (k < d) {
      degens[k].assign(k + 1, std::vector<CellId>(sizes[k]));
      for (int i = 0; i <= k; ++i)
        for (CellId c = 0; c < sizes[k]; ++c) degens[k][i][c] = x.hdegen[k][k + 1][i][x.vdegen[k][k][i][c]];
    }
  }
  return SSet(std::move(sizes), std::move(faces), std::move(degens));
}

BisimplicialSet transpose(const BisimplicialSet& x) {
  BisimplicialSet t;
  t.P = x.Q;
  t.Q = x.P;
  t.sizes.assign(t.P + 1, std::vector<std::size_t>(t.Q + 1));
  auto flip = [&](const BiOperatorTables& src) {
    BiOperatorTables out(t.P + 1, std::vector<std::vector<std::vector<CellId>>>(t.Q + 1));
    for (int p = 0; p <= t.P; ++p)
      for (int q = 0; q <= t.Q; ++q) out[p][q] = src[q][p];
    return out;
  };
  for (int p = 0; p <= t.P; ++p)
    for (int q = 0; q <= t.Q; ++q) t.sizes[p][q] = x.sizes[q][p];
  t.hface = flip(x.vface);
  t.hdegen = flip(x.vdegen);
  t.vface = flip(x.hface);
  t.vdegen = flip(x.hdegen);
  return t;
}

MarkedSSet diag_plus(const MarkedBisimplicialSet& m) {
  MarkedSSet out{diagonal(m.space), {}};
  if (out.space.dim() >= 1) out.marked = m.marked.at(1);
  return out;
}

ValidationReport validate_bisset(const BisimplicialSet& x) {
  ValidationReport r;
  if (x.P < 0 || x.Q < 0 || static_cast<int>(x.sizes.size()) != x.P + 1) {
    r.add("shape", "grid size does not match dims");
    return r;
  }
  auto check_tables = [&](const BiOperatorTables& t, const char* name, bool horizontal, bool face) {
    if (static_cast<int>(t.size()) != x.P + 1) return false;
    for (int p = 0; p <= x.P; ++p) {
      if (static_cast<int>(t[p].size()) != x.Q + 1 || static_cast<int>(x.sizes[p].size()) != x.Q + 1) return false;
      for (int q = 0; q <= x.Q; ++q) {
        const int n = horizontal ? p : q, top = horizontal ? x.P : x.Q;
        const bool present = face ? n > 0 : n < top;
        if (t[p][q].size() != (present ? static_cast<std::size_t>(n) + 1 : 0)) return false;
        const int tp = horizontal ? (face ? p - 1 : p + 1) : p;
        const int tq = horizontal ? q : (face ? q - 1 : q + 1);
        for (const auto& op : t[p][q]) {
          if (op.size() != x.sizes[p][q]) return false;
          for (CellId c : op)
            if (c >= x.sizes[tp][tq]) {
              r.add("range", std::string(name) + " at " + bicell(p, q, 0));
              return true;
            }
        }
      }
    }
    return true;
  };
  for (auto [t, name, h, f] : {std::tuple{&x.hface, "hface", true, true}, std::tuple{&x.hdegen, "hdegen", true, false},
                               std::tuple{&x.vface, "vface", false, true}, std::tuple{&x.vdegen, "vdegen", false, false}})
    if (!check_tables(*t, name, h, f)) {
      r.add("shape", std::string(name) + " tables are malformed");
      return r;
    }
  if (!r.ok()) return r;

  for (int q = 0; q <= x.Q; ++q) r.append(validate_sset(row(x, q)), "row " + std::to_string(q) + " ");
  for (int p = 0; p <= x.P; ++p) r.append(validate_sset(column(x, p)), "column " + std::to_string(p) + " ");

  // One violation per cell and kind of square, however many (i, j) fail.
  for (int p = 0; p <= x.P; ++p)
    for (int q = 0; q <= x.Q; ++q)
      for (CellId c = 0; c < x.sizes[p][q]; ++c) {
        bool ff = true, fd = true, df = true, dd = true;
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j) {
            if (p > 0 && q > 0)
              ff = ff && x.hface[p][q - 1][i][x.vface[p][q][j][c]] == x.vface[p - 1][q][j][x.hface[p][q][i][c]];
            if (p > 0 && q < x.Q)
              fd = fd && x.hface[p][q + 1][i][x.vdegen[p][q][j][c]] == x.vdegen[p - 1][q][j][x.hface[p][q][i][c]];
            if (p < x.P && q > 0)
              df = df && x.hdegen[p][q - 1][i][x.vface[p][q][j][c]] == x.vface[p + 1][q][j][x.hdegen[p][q][i][c]];
            if (p < x.P && q < x.Q)
              dd = dd && x.hdegen[p][q + 1][i][x.vdegen[p][q][j][c]] == x.vdegen[p + 1][q][j][x.hdegen[p][q][i][c]];
          }
        if (!ff) r.add("square hface/vface", bicell(p, q, c));
        if (!fd) r.add("square hface/vdegen", bicell(p, q, c));
        if (!df) r.add("square hdegen/vface", bicell(p, q, c));
        if (!dd) r.add("square hdegen/vdegen", bicell(p, q, c));
      }
  return r;
}

ValidationReport validate_marked_bisset(const MarkedBisimplicialSet& m) {
  ValidationReport r = validate_bisset(m.space);
  if (!r.ok()) return r;
  const BisimplicialSet& x = m.space;
  if (x.P < 1) {
    if (!m.marked.empty()) r.add("marking", "marking given but there is no column 1");
    return r;
  }
  if (static_cast<int>(m.marked.size()) != x.Q + 1) {
    r.add("marking", "marking has the wrong number of rows");
    return r;
  }
  for (int q = 0; q <= x.Q; ++q)
    if (m.marked[q].size() != x.sizes[1][q]) {
      r.add("marking", "marking row " + std::to_string(q) + " has the wrong length");
      return r;
    }
  for (int q = 0; q <= x.Q; ++q) {
    for (CellId v = 0; v < x.sizes[0][q]; ++v)
      if (!m.marked[q][x.hdegen[0][q][0][v]])
        r.add("marking/degenerate", "s_0 of " + bicell(0, q, v) + " is not marked");
    for (CellId c = 0; c < x.sizes[1][q]; ++c) {
      if (!m.marked[q][c]) continue;
      for (int j = 0; q > 0 && j <= q; ++j)
        if (!m.marked[q - 1][x.vface[1][q][j][c]])
          r.add("marking/closure", "vface " + std::to_string(j) + " of marked " + bicell(1, q, c));
      for (int j = 0; q < x.Q && j <= q; ++j)
        if (!m.marked[q + 1][x.vdegen[1][q][j][c]])
          r.add("marking/closure", "vdegen " + std::to_string(j) + " of marked " + bicell(1, q, c));
    }
  }
  return r;
}

ValidationReport validate_bisset_map(const BisimplicialSet& src, const BisimplicialSet& tgt,
                                     const BisimplicialMap& f) {
  ValidationReport r;
  const int P = std::min(src.P, tgt.P), Q = std::min(src.Q, tgt.Q);
  if (static_cast<int>(f.levels.size()) != P + 1) {
    r.add("shape", "map grid has the wrong size");
    return r;
  }
  for (int p = 0; p <= P; ++p) {
    if (static_cast<int>(f.levels[p].size()) != Q + 1) {
      r.add("shape", "map grid has the wrong size");
      return r;
    }
    for (int q = 0; q <= Q; ++q) {
      if (f.levels[p][q].size() != src.sizes[p][q]) {
        r.add("shape", "map level " + bicell(p, q, 0) + " has the wrong length");
        return r;
      }
      for (CellId c : f.levels[p][q])
        if (c >= tgt.sizes[p][q]) {
          r.add("range", "map value out of range at bidegree (" + std::to_string(p) + ", " + std::to_string(q) + ")");
          return r;
        }
    }
  }
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (CellId c = 0; c < src.sizes[p][q]; ++c) {
        const CellId img = f.levels[p][q][c];
        for (int i = 0; p > 0 && i <= p; ++i)
          if (f.levels[p - 1][q][src.hface[p][q][i][c]] != tgt.hface[p][q][i][img])
            r.add("map/hface", "d_" + std::to_string(i) + " at " + bicell(p, q, c));
        for (int i = 0; p < P && i <= p; ++i)
          if (f.levels[p + 1][q][src.hdegen[p][q][i][c]] != tgt.hdegen[p][q][i][img])
            r.add("map/hdegen", "s_" + std::to_string(i) + " at " + bicell(p, q, c));
        for (int i = 0; q > 0 && i <= q; ++i)
          if (f.levels[p][q - 1][src.vface[p][q][i][c]] != tgt.vface[p][q][i][img])
            r.add("map/vface", "d_" + std::to_string(i) + " at " + bicell(p, q, c));
        for (int i = 0; q < Q && i <= q; ++i)
          if (f.levels[p][q + 1][src.vdegen[p][q][i][c]] != tgt.vdegen[p][q][i][img])
            r.add("map/vdegen", "s_" + std::to_string(i) + " at " + bicell(p, q, c));
      }
  return r;
}

ValidationReport validate_marked_map(const MarkedBisimplicialSet& src, const MarkedBisimplicialSet& tgt,
                                     const BisimplicialMap& f) {
  ValidationReport r = validate_bisset_map(src.space, tgt.space, f);
  if (!r.ok() || src.space.P < 1 || tgt.space.P < 1) return r;
  const int Q = std::min(src.space.Q, tgt.space.Q);
  for (int q = 0; q <= Q; ++q)
    for (CellId c = 0; c < src.space.sizes[1][q]; ++c)
      if (src.marked[q][c] && !tgt.marked[q][f.levels[1][q][c]])
        r.add("map/marking", "marked " + bicell(1, q, c) + " goes to an unmarked cell");
  return r;
}

}  // namespace nervekit
