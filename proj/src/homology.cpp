#include "nervekit/homology.hpp"

#include <algorithm>
#include <map>

namespace nervekit {

ChainComplex normalized_chains(const SSet& x) {
  ChainComplex cx;
  cx.dim = x.dim();
  for (int n = 0; n <= x.dim(); ++n) {
    cx.basis.push_back(x.nondegenerate(n));
    cx.position.emplace_back(x.size(n), -1);
    for (std::size_t k = 0; k < cx.basis[n].size(); ++k) cx.position[n][cx.basis[n][k]] = static_cast<int>(k);
  }
  cx.boundary.emplace_back(0, cx.basis[0].size());
  for (int n = 1; n <= x.dim(); ++n) {
    SparseMatrix d(cx.basis[n - 1].size(), cx.basis[n].size());
    for (std::size_t k = 0; k < cx.basis[n].size(); ++k)
      for (int i = 0; i <= n; ++i) {
        const int row = cx.position[n - 1][x.face(n, i, cx.basis[n][k])];
        if (row >= 0) d.add(static_cast<std::size_t>(row), k, i % 2 == 0 ? 1 : -1);
      }
    cx.boundary.push_back(std::move(d));
  }
  return cx;
}

std::string HomologyGroup::to_string(Coeff coeff) const {
  const std::string ring = coeff == Coeff::F2 ? "F2" : "Z";
  std::string s;
  if (rank > 0) s = rank == 1 ? ring : ring + "^" + std::to_string(rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  return s.empty() ? "0" : s;
}

namespace {

void check_degree(int max_deg, int dim, const char* who) {
  if (max_deg < 0 || max_deg > dim - 1)
    throw DegreeError(std::string(who) + ": degree " + std::to_string(max_deg) + " outside validity bound " +
                      std::to_string(dim - 1));
}

HomologyReport homology_of(const ChainComplex& cx, Coeff coeff, int max_deg) {
  HomologyReport rep;
  rep.coeff = coeff;
  rep.validity_bound = cx.dim - 1;
  std::vector<SmithInvariants> inv;
  for (int n = 0; n <= max_deg + 1; ++n) inv.push_back(smith_invariants(cx.boundary[n], coeff));
  for (int n = 0; n <= max_deg; ++n) {
    HomologyGroup g;
    g.degree = n;
    g.rank = cx.basis[n].size() - inv[n].rank - inv[n + 1].rank;
    g.torsion = inv[n + 1].torsion;
    rep.groups.push_back(std::move(g));
  }
  return rep;
}

void reduce(mpz_class& v, Coeff coeff) {
  if (coeff == Coeff::F2) v = v % 2 != 0 ? 1 : 0;
}

DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, Coeff coeff) {
  DenseMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols; ++c)
        if (b.at(k, c) != 0) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  for (auto& v : out.a) reduce(v, coeff);
  return out;
}

DenseMatrix select_rows(const DenseMatrix& m, const std::vector<std::size_t>& rows) {
  DenseMatrix out(rows.size(), m.cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(rows[r], c);
  return out;
}

DenseMatrix select_cols(const DenseMatrix& m, const std::vector<std::size_t>& cols) {
  DenseMatrix out(m.rows, cols.size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(r, cols[c]);
  return out;
}

// Cycles of degree n in kernel coordinates.
struct CyclePresentation {
  DenseMatrix coords;     // k x C_n : cycle -> kernel coordinates
  DenseMatrix basis;      // C_n x k : kernel basis
  DenseMatrix relations;  // k x C_{n+1} : boundaries in kernel coordinates
};

CyclePresentation cycles(const ChainComplex& cx, int n, Coeff coeff) {
  const ColumnReduction cr = column_reduce(DenseMatrix::from_sparse(cx.boundary[n]), coeff);
  CyclePresentation p;
  p.coords = select_rows(cr.vinv, cr.kernel);
  p.basis = select_cols(cr.v, cr.kernel);
  p.relations = mul(p.coords, DenseMatrix::from_sparse(cx.boundary[n + 1]), coeff);
  return p;
}

bool same_group(const HomologyGroup& a, const HomologyGroup& b) { return a.rank == b.rank && a.torsion == b.torsion; }

}  // namespace

HomologyReport homology(const SSet& x, Coeff coeff, int max_deg) {
  check_degree(max_deg, x.dim(), "homology");
  return homology_of(normalized_chains(x), coeff, max_deg);
}

std::vector<std::vector<CellId>> pi0(const SSet& x) {
  const std::vector<CellId> label = vertex_components(x);
  std::map<CellId, std::vector<CellId>> classes;
  for (CellId v = 0; v < label.size(); ++v) classes[label[v]].push_back(v);
  std::vector<std::vector<CellId>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

ChainMapReport induced_chain_iso(const SSet& src, const SSet& tgt, const SimplicialMap& f, Coeff coeff,
                                 int max_deg) {
  check_degree(max_deg, std::min(src.dim(), tgt.dim()), "induced_chain_iso");
  if (f.levels.size() < static_cast<std::size_t>(max_deg) + 2)
    throw DegreeError("induced_chain_iso: map is truncated below degree " + std::to_string(max_deg + 1));
  const ChainComplex cx = normalized_chains(src), cy = normalized_chains(tgt);
  ChainMapReport rep;
  rep.coeff = coeff;
  rep.max_deg = max_deg;
  for (int n = 0; n <= max_deg + 1; ++n) {
    SparseMatrix m(cy.basis[n].size(), cx.basis[n].size());
    for (std::size_t k = 0; k < cx.basis[n].size(); ++k) {
      const int row = cy.position[n][f.levels[n][cx.basis[n][k]]];
      if (row >= 0) m.add(static_cast<std::size_t>(row), k, 1);
    }
    rep.matrices.push_back(std::move(m));
  }
  rep.commutes.push_back(1);
  for (int n = 1; n <= max_deg + 1; ++n)
    rep.commutes.push_back(multiply(cy.boundary[n], rep.matrices[n]) ==
                           multiply(rep.matrices[n - 1], cx.boundary[n]));
  rep.source = homology_of(cx, coeff, max_deg);
  rep.target = homology_of(cy, coeff, max_deg);
  for (int n = 0; n <= max_deg; ++n) {
    if (!same_group(rep.source.groups[n], rep.target.groups[n])) {
      rep.iso.push_back(0);
      continue;
    }
    const CyclePresentation px = cycles(cx, n, coeff), py = cycles(cy, n, coeff);
    const DenseMatrix induced = mul(py.coords, mul(DenseMatrix::from_sparse(rep.matrices[n]), px.basis, coeff), coeff);
    // Surjective iff [induced | relations] spans the target cycle lattice.
    const std::size_t k = induced.rows;
    DenseMatrix joined(k, induced.cols + py.relations.cols);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < induced.cols; ++c) joined.at(r, c) = induced.at(r, c);
      for (std::size_t c = 0; c < py.relations.cols; ++c) joined.at(r, induced.cols + c) = py.relations.at(r, c);
    }
    const SmithInvariants inv = smith_invariants(std::move(joined), coeff);
    rep.iso.push_back(inv.rank == k && inv.torsion.empty());
  }
  return rep;
}

}  // namespace nervekit
