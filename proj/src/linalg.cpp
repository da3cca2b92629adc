#include "nervekit/linalg.hpp"

#include <algorithm>
#include <set>

namespace nervekit {

const char* coeff_name(Coeff c) { return c == Coeff::Z ? "z" : "f2"; }

void SparseMatrix::add(std::size_t r, std::size_t c, const mpz_class& v) {
  if (v == 0) return;
  auto [it, fresh] = data[r].emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) data[r].erase(it);
  }
}

mpz_class SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data[r].find(c);
  return it == data[r].end() ? mpz_class(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data) n += row.size();
  return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (const auto& [k, v] : a.data[r])
      for (const auto& [c, w] : b.data[k]) out.add(r, c, v * w);
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

namespace {

void reduce(mpz_class& v, Coeff coeff) {
  if (coeff == Coeff::F2) v = v % 2 != 0 ? 1 : 0;
}

bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

}  // namespace

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
  DenseMatrix d(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.data[r]) d.at(r, c) = v;
  return d;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 1;
  return d;
}

SmithInvariants smith_invariants(DenseMatrix m, Coeff coeff) {
  for (auto& v : m.a) reduce(v, coeff);
  SmithInvariants out;
  std::vector<mpz_class> diag;
  const std::size_t R = m.rows, C = m.cols;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = R, pc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c)
          if (m.at(r, c) != 0 && (pr == R || abs(m.at(r, c)) < abs(m.at(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == R) goto done;
      for (std::size_t c = 0; c < C; ++c) std::swap(m.at(t, c), m.at(pr, c));
      for (std::size_t r = 0; r < R; ++r) std::swap(m.at(r, t), m.at(r, pc));
      const mpz_class p = m.at(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (m.at(r, t) == 0) continue;
        mpz_class q = coeff == Coeff::F2 ? mpz_class(1) : mpz_class(m.at(r, t) / p);
        for (std::size_t c = t; c < C; ++c) {
          m.at(r, c) -= q * m.at(t, c);
          reduce(m.at(r, c), coeff);
        }
        if (m.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (m.at(t, c) == 0) continue;
        mpz_class q = coeff == Coeff::F2 ? mpz_class(1) : mpz_class(m.at(t, c) / p);
        for (std::size_t r = t; r < R; ++r) {
          m.at(r, c) -= q * m.at(r, t);
          reduce(m.at(r, c), coeff);
        }
        if (m.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the trailing block; otherwise fold a row in and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < R && divides; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (m.at(r, c) % p != 0) {
            for (std::size_t k = t; k < C; ++k) m.at(t, k) += m.at(r, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m.at(t, t)));
  }
done:
  out.rank = diag.size();
  if (coeff == Coeff::Z)
    for (const auto& d : diag)
      if (d != 1) out.torsion.push_back(d);
  return out;
}

SmithInvariants smith_invariants(const SparseMatrix& m, Coeff coeff) {
  std::vector<std::map<std::size_t, mpz_class>> rows(m.rows);
  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v0] : m.data[r]) {
      mpz_class v = v0;
      reduce(v, coeff);
      if (v == 0) continue;
      rows[r].emplace(c, v);
      col_rows[c].insert(r);
    }
  std::vector<char> alive(m.rows, 1);
  std::size_t unit_rank = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      std::size_t best = m.cols;
      for (const auto& [c, v] : rows[r])
        if (is_unit(v) && (best == m.cols || col_rows[c].size() < col_rows[best].size())) best = c;
      if (best == m.cols) continue;
      const mpz_class pv = rows[r].at(best);
      const std::vector<std::size_t> others(col_rows[best].begin(), col_rows[best].end());
      for (std::size_t r2 : others) {
        if (r2 == r) continue;
        const mpz_class f = rows[r2].at(best) * pv;
        for (const auto& [c, v] : rows[r]) {
          auto [it, fresh] = rows[r2].emplace(c, 0);
          it->second -= f * v;
          reduce(it->second, coeff);
          if (it->second == 0) {
            rows[r2].erase(it);
            col_rows[c].erase(r2);
          } else if (fresh) {
            col_rows[c].insert(r2);
          }
        }
      }
      for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
      rows[r].clear();
      alive[r] = 0;
      ++unit_rank;
      progress = true;
    }
  }
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (alive[r] && !rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  SmithInvariants out;
  if (!live_rows.empty()) {
    std::vector<std::size_t> col_pos(m.cols);
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
    DenseMatrix d(live_rows.size(), live_cols.size());
    for (std::size_t k = 0; k < live_rows.size(); ++k)
      for (const auto& [c, v] : rows[live_rows[k]]) d.at(k, col_pos[c]) = v;
    out = smith_invariants(std::move(d), coeff);
  }
  out.rank += unit_rank;
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

ColumnReduction column_reduce(DenseMatrix m, Coeff coeff) {
  for (auto& v : m.a) reduce(v, coeff);
  const std::size_t R = m.rows, C = m.cols;
  ColumnReduction out;
  out.v = DenseMatrix::identity(C);
  out.vinv = DenseMatrix::identity(C);
  std::vector<char> pivot(C, 0);
  // col_j -= q col_k, tracked in V and V^{-1}.
  auto subtract = [&](std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t r = 0; r < R; ++r) {
      m.at(r, j) -= q * m.at(r, k);
      reduce(m.at(r, j), coeff);
    }
    for (std::size_t r = 0; r < C; ++r) {
      out.v.at(r, j) -= q * out.v.at(r, k);
      reduce(out.v.at(r, j), coeff);
    }
    for (std::size_t c = 0; c < C; ++c) {
      out.vinv.at(k, c) += q * out.vinv.at(j, c);
      reduce(out.vinv.at(k, c), coeff);
    }
  };
  for (std::size_t i = 0; i < R; ++i) {
    for (;;) {
      std::size_t best = C, count = 0;
      for (std::size_t j = 0; j < C; ++j)
        if (!pivot[j] && m.at(i, j) != 0) {
          ++count;
          if (best == C || abs(m.at(i, j)) < abs(m.at(i, best))) best = j;
        }
      if (count == 0) break;
      if (count == 1) {
        pivot[best] = 1;
        break;
      }
      for (std::size_t j = 0; j < C; ++j)
        if (j != best && !pivot[j] && m.at(i, j) != 0) {
          const mpz_class q = coeff == Coeff::F2 ? mpz_class(1) : mpz_class(m.at(i, j) / m.at(i, best));
          subtract(j, best, q);
        }
    }
  }
  for (std::size_t j = 0; j < C; ++j)
    if (!pivot[j]) out.kernel.push_back(j);
  out.reduced = std::move(m);
  return out;
}

}  // namespace nervekit
